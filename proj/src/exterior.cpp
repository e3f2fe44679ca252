#include "zonoid/exterior.hpp"

#include <Eigen/Dense>

namespace zonoid {

namespace {

Eigen::MatrixXd coordinate_matrix(const std::vector<ExteriorElement<double>>& xs) {
  const int n = xs.front().ambient, d = xs.front().degree;
  check_coordinate_cap(n, d);
  const auto keys = subsets(n, d);
  std::map<IndexSet, int> column;
  for (std::size_t i = 0; i < keys.size(); ++i) column.emplace(keys[i], static_cast<int>(i));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(keys.size()));
  for (std::size_t r = 0; r < xs.size(); ++r) {
    if (xs[r].ambient != n || xs[r].degree != d) throw std::invalid_argument("span_rank: mixed degrees or ambient dimensions");
    for (const auto& [k, v] : xs[r].coords) m(static_cast<Eigen::Index>(r), column.at(k)) = v;
  }
  return m;
}

}  // namespace

double norm(const SimpleVector<double>& v) {
  const int d = v.degree();
  if (d == 0) return 1.0;
  if (d > v.ambient) throw std::invalid_argument("total degree exceeds ambient dimension");
  Eigen::MatrixXd m(v.ambient, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < v.ambient; ++r) m(r, c) = v.factors[c][r];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  double p = 1.0;
  for (int i = 0; i < d; ++i) p *= qr.matrixQR()(i, i);
  return std::fabs(p);
}

double wedge_norm(const std::vector<SimpleVector<double>>& parts) { return norm(concat(parts)); }

int span_rank(const std::vector<ExteriorElement<double>>& xs, double rel_tol) {
  if (xs.empty()) return 0;
  Eigen::MatrixXd m = coordinate_matrix(xs);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

int span_rank(const std::vector<SimpleVector<double>>& vs, double rel_tol) {
  std::vector<ExteriorElement<double>> xs;
  xs.reserve(vs.size());
  for (const auto& v : vs) xs.push_back(expand(v));
  return span_rank(xs, rel_tol);
}

std::vector<std::vector<double>> span_basis(const std::vector<ExteriorElement<double>>& xs, double rel_tol) {
  std::vector<std::vector<double>> out;
  if (xs.empty()) return out;
  Eigen::MatrixXd m = coordinate_matrix(xs);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= rel_tol * s(0)) break;
    Eigen::VectorXd col = svd.matrixV().col(i);
    out.emplace_back(col.data(), col.data() + col.size());
  }
  return out;
}

}  // namespace zonoid
