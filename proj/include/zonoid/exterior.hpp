#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "zonoid/rational.hpp"

namespace zonoid {

// Scalar plumbing so the kernel runs over double and over exact rationals.
inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

template <class T>
T determinant(DenseMatrix<T> m);

template <>
inline Rational determinant<Rational>(DenseMatrix<Rational> m) {
  return determinant_exact(m);
}

// Gaussian elimination with partial pivoting.
template <>
inline double determinant<double>(DenseMatrix<double> m) {
  const std::size_t n = m.size();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
    if (m[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i][k] / m[k][k];
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

inline constexpr std::uint64_t kCoordinateCap = 1000000;

using IndexSet = std::vector<int>;  // sorted, 0-based

template <class T>
struct SimpleVector {
  int ambient = 0;
  std::vector<std::vector<T>> factors;

  SimpleVector() = default;
  SimpleVector(int n, std::vector<std::vector<T>> fs) : ambient(n), factors(std::move(fs)) {
    for (const auto& f : factors)
      if (static_cast<int>(f.size()) != ambient) throw std::invalid_argument("factor length differs from ambient dimension");
  }
  int degree() const { return static_cast<int>(factors.size()); }
};

template <class T>
struct ExteriorElement {
  int ambient = 0;
  int degree = 0;
  std::map<IndexSet, T> coords;

  ExteriorElement() = default;
  ExteriorElement(int n, int d) : ambient(n), degree(d) {}

  void add(const IndexSet& key, const T& value) {
    auto it = coords.find(key);
    if (it == coords.end()) {
      if (value != T(0)) coords.emplace(key, value);
      return;
    }
    it->second += value;
    if (it->second == T(0)) coords.erase(it);
  }
  T at(const IndexSet& key) const {
    auto it = coords.find(key);
    return it == coords.end() ? T(0) : it->second;
  }
  bool is_zero() const { return coords.empty(); }
};

inline std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b = binomial(n, k);
  if (!b.fits_ulong_p()) return UINT64_MAX;
  return b.get_ui();
}

inline void check_coordinate_cap(int n, int d) {
  if (binomial_u64(n, d) > kCoordinateCap)
    throw std::length_error("binomial(" + std::to_string(n) + "," + std::to_string(d) + ") exceeds the coordinate cap");
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Sign of the permutation sorting the concatenation a ++ b (both sorted); 0 if they overlap.
inline int merge_sign(const IndexSet& a, const IndexSet& b) {
  int inversions = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    while (j < b.size() && b[j] < a[i]) ++j;
    if (j < b.size() && b[j] == a[i]) return 0;
    inversions += static_cast<int>(j);
  }
  // each a[i] passes the b-elements smaller than it
  return inversions % 2 == 0 ? 1 : -1;
}

template <class T>
SimpleVector<T> concat(const std::vector<SimpleVector<T>>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat: empty list");
  SimpleVector<T> out;
  out.ambient = parts.front().ambient;
  for (const auto& p : parts) {
    if (p.ambient != out.ambient) throw std::invalid_argument("ambient dimension mismatch");
    out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
  }
  if (out.degree() > out.ambient) throw std::invalid_argument("total degree exceeds ambient dimension");
  return out;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T wedge_inner(const SimpleVector<T>& a, const SimpleVector<T>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("wedge_inner: ambient dimension mismatch");
  if (a.degree() != b.degree()) throw std::invalid_argument("wedge_inner: degree mismatch");
  const int d = a.degree();
  DenseMatrix<T> g(d, std::vector<T>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g[i][j] = dot(a.factors[i], b.factors[j]);
  return determinant(std::move(g));
}

// Gram determinant of the concatenated factors, i.e. the squared wedge norm.
template <class T>
T wedge_norm_sq(const std::vector<SimpleVector<T>>& parts) {
  SimpleVector<T> s = concat(parts);
  T g = wedge_inner(s, s);
  if constexpr (std::is_same_v<T, double>) {
    if (g < 0) g = 0;  // roundoff on dependent factors
  }
  return g;
}

// |prod diag R| of a QR factorization; stays accurate (~1e-16) for dependent factors,
// unlike the square root of the Gram determinant.
double wedge_norm(const std::vector<SimpleVector<double>>& parts);
double norm(const SimpleVector<double>& v);

template <class T>
ExteriorElement<T> expand(const SimpleVector<T>& s) {
  const int n = s.ambient, d = s.degree();
  if (d > n) throw std::invalid_argument("expand: degree exceeds ambient dimension");
  check_coordinate_cap(n, d);
  ExteriorElement<T> out(n, d);
  if (d == 0) {
    out.add({}, T(1));
    return out;
  }
  for (const auto& rows : subsets(n, d)) {
    DenseMatrix<T> m(d, std::vector<T>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m[r][c] = s.factors[c][rows[r]];
    T det = determinant(std::move(m));
    if constexpr (std::is_same_v<T, double>) {
      if (det != 0.0) out.coords.emplace(rows, det);
    } else {
      out.add(rows, det);
    }
  }
  return out;
}

template <class T>
T dot(const ExteriorElement<T>& a, const ExteriorElement<T>& b) {
  if (a.ambient != b.ambient || a.degree != b.degree) throw std::invalid_argument("dot: degree or ambient mismatch");
  T s = 0;
  for (const auto& [k, v] : a.coords) {
    auto it = b.coords.find(k);
    if (it != b.coords.end()) s += v * it->second;
  }
  return s;
}

template <class T>
ExteriorElement<T> wedge(const ExteriorElement<T>& a, const ExteriorElement<T>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("wedge: ambient mismatch");
  if (a.degree + b.degree > a.ambient) throw std::invalid_argument("wedge: degree overflow");
  ExteriorElement<T> out(a.ambient, a.degree + b.degree);
  for (const auto& [ka, va] : a.coords)
    for (const auto& [kb, vb] : b.coords) {
      const int sg = merge_sign(ka, kb);
      if (sg == 0) continue;
      IndexSet k;
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k));
      out.add(k, sg > 0 ? T(va * vb) : T(-(va * vb)));
    }
  return out;
}

template <class T>
ExteriorElement<T> scaled(ExteriorElement<T> x, const T& c) {
  if (c == T(0)) {
    x.coords.clear();
    return x;
  }
  for (auto& [k, v] : x.coords) v *= c;
  return x;
}

template <class T>
ExteriorElement<T> operator+(ExteriorElement<T> a, const ExteriorElement<T>& b) {
  if (a.ambient != b.ambient || a.degree != b.degree) throw std::invalid_argument("sum: degree or ambient mismatch");
  for (const auto& [k, v] : b.coords) a.add(k, v);
  return a;
}

inline IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i)
      ++j;
    else
      out.push_back(i);
  }
  return out;
}

// *e_I = orientation * sgn(I, I^c) e_{I^c}, forced by <x,y> vol = x ^ *y.
template <class T>
ExteriorElement<T> hodge_star(const ExteriorElement<T>& x, int orientation = 1) {
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  ExteriorElement<T> out(x.ambient, x.ambient - x.degree);
  for (const auto& [k, v] : x.coords) {
    IndexSet c = complement(k, x.ambient);
    const int sg = merge_sign(k, c) * orientation;
    out.add(c, sg > 0 ? v : T(-v));
  }
  return out;
}

// Coefficient of e_1 ^ ... ^ e_N.
template <class T>
T volume_coefficient(const ExteriorElement<T>& top) {
  if (top.degree != top.ambient) throw std::invalid_argument("not a top-degree element");
  return top.at(complement({}, top.ambient));
}

int span_rank(const std::vector<SimpleVector<double>>& vs, double rel_tol = 1e-9);
int span_rank(const std::vector<ExteriorElement<double>>& xs, double rel_tol = 1e-9);

// Orthonormal basis (rows, in the lexicographic coordinate order of subsets(N,d)) of the span.
std::vector<std::vector<double>> span_basis(const std::vector<ExteriorElement<double>>& xs, double rel_tol = 1e-9);

template <class T>
SimpleVector<T> basis_simple(int n, const IndexSet& idx) {
  std::vector<std::vector<T>> fs;
  for (int i : idx) {
    std::vector<T> e(n, T(0));
    e[i] = T(1);
    fs.push_back(std::move(e));
  }
  return SimpleVector<T>(n, std::move(fs));
}

// Basis of the orthogonal complement of the span of the given rows, by exact-style RREF.
template <class T>
std::vector<std::vector<T>> nullspace(const std::vector<std::vector<T>>& rows, int n) {
  DenseMatrix<T> m = rows;
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < n && r < m.size(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r; i < m.size(); ++i)
      if (abs_value(m[i][c]) > abs_value(m[piv][c])) piv = i;
    if constexpr (std::is_same_v<T, double>) {
      if (std::fabs(m[piv][c]) < 1e-12) continue;
    } else {
      if (m[piv][c] == 0) continue;
    }
    std::swap(m[r], m[piv]);
    T p = m[r][c];
    for (auto& x : m[r]) x /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == T(0)) continue;
      T f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<T>> out;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<T> v(n, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace zonoid
