#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zonoid/sampling.hpp"
#include "zonoid/zonoid.hpp"

using namespace zonoid;

namespace {

double ks_uniform(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) d = std::max({d, (i + 1) / n - xs[i], xs[i] - i / n});
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

McConfig cfg(std::uint64_t samples, std::uint64_t seed, unsigned workers = 0) {
  McConfig c;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

}  // namespace

TEST_CASE("monte_carlo reports the sample mean and standard error") {
  const std::uint64_t n = 10001;
  auto e = monte_carlo(cfg(n, 1, 3), [](std::uint64_t t) { return static_cast<double>(t % 7); });
  double mean = 0.0, ss = 0.0;
  for (std::uint64_t t = 0; t < n; ++t) mean += double(t % 7) / n;
  for (std::uint64_t t = 0; t < n; ++t) ss += (double(t % 7) - mean) * (double(t % 7) - mean);
  CHECK(e.mean == doctest::Approx(mean).epsilon(1e-13));
  CHECK(e.std_error == doctest::Approx(std::sqrt(ss / (n - 1) / n)).epsilon(1e-10));
  CHECK(e.samples == n);
  CHECK(e.max_value == 6.0);
}

TEST_CASE("determinism across runs and worker counts") {
  auto z = gaussian_ball_sampler(3);
  const auto a = mc_length(z, cfg(20000, 99, 1));
  const auto b = mc_length(z, cfg(20000, 99, 1));
  const auto c = mc_length(z, cfg(20000, 99, 5));
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(mc_length(z, cfg(20000, 100, 1)).mean != a.mean);
}

TEST_CASE("haar_orthogonal") {
  int plus = 0;
  const int n = 10000;
  for (int t = 0; t < n; ++t) {
    Rng rng(5, t, 0);
    const double q = haar_orthogonal(1, rng)(0, 0);
    CHECK(std::fabs(q) == 1.0);
    plus += q > 0;
  }
  CHECK(std::fabs(plus - n / 2.0) < 3.0 * std::sqrt(n / 4.0));
  Rng rng(6, 0, 0);
  auto q = haar_orthogonal(5, rng);
  CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("haar_unitary on U(1) has a uniform angle") {
  std::vector<double> angles;
  for (int t = 0; t < 20000; ++t) {
    Rng rng(7, t, 0);
    auto u = haar_unitary(1, rng);
    CHECK(std::fabs(u(0, 0) - u(1, 1)) < 1e-12);
    CHECK(std::fabs(u(0, 1) + u(1, 0)) < 1e-12);
    angles.push_back((std::atan2(u(1, 0), u(0, 0)) + std::numbers::pi) / (2 * std::numbers::pi));
  }
  CHECK(ks_uniform(angles) < 1.63 / std::sqrt(angles.size()));
  Rng rng(8, 0, 0);
  auto u = haar_unitary(3, rng);
  const auto j = complex_structure(3);
  CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
  CHECK((u * j - j * u).norm() < 1e-12);
}

TEST_CASE("Haar invariance: <q1,u> has the same law for any unit u") {
  std::vector<double> a, b;
  const double s = 1.0 / std::sqrt(3.0);
  for (int t = 0; t < 100000; ++t) {
    Rng r1(9, t, 0), r2(10, t, 0);
    auto q1 = haar_orthogonal(3, r1), q2 = haar_orthogonal(3, r2);
    a.push_back(q1(0, 0));
    b.push_back(s * (q2(0, 0) + q2(1, 0) + q2(2, 0)));
  }
  const double n = 100000;
  CHECK(ks_two_sample(a, b) < 1.63 * std::sqrt(2.0 / n));
}

TEST_CASE("complex lines") {
  Rng rng(11, 0, 0);
  auto l = sample_complex_line(1, rng);
  CHECK(l.degree() == 2);
  CHECK(norm(l) == doctest::Approx(1.0));
  Rng rng2(12, 0, 0);
  auto m = sample_complex_line(3, rng2);
  const auto j = complex_structure(3);
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(m.factors[0].data(), 6);
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(m.factors[1].data(), 6);
  CHECK((j * x - y).norm() < 1e-12);
  CHECK(norm(m) == doctest::Approx(1.0));
  // E || xi ^ z1 ^ z2 || with Gaussian z_i in R^4 is E|det| of a 2x2 Gaussian = 1
  auto e = monte_carlo(cfg(100000, 13), [](std::uint64_t t) {
    Rng r(13, t, 0);
    auto xi = sample_complex_line(2, r);
    SimpleVector<double> z(4, {gaussian_vector(4, r), gaussian_vector(4, r)});
    return wedge_norm({xi, z});
  });
  CHECK(e.covers(1.0));
}

TEST_CASE("Schubert samples") {
  Rng rng(14, 0, 0);
  auto v = sample_schubert({1}, 2, 2, rng);
  REQUIRE(v.degree() == 1);
  const auto& a = v.factors[0];
  CHECK(a[0] * a[3] - a[1] * a[2] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<SimpleVector<double>> vs;
  for (int t = 0; t < 200; ++t) {
    Rng r(15, t, 0);
    vs.push_back(sample_schubert({1}, 2, 2, r));
  }
  CHECK(span_rank(vs) == 4);
  for (int t = 0; t < 50; ++t) {
    Rng r(16, t, 0);
    CHECK(norm(sample_schubert({2, 1}, 2, 3, r)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Monte-Carlo lengths against closed forms") {
  const double pi = std::numbers::pi;
  CHECK(mc_length(gaussian_ball_sampler(3), cfg(100000, 17)).covers(4.0));
  auto b2 = gaussian_ball_sampler(2);
  CHECK(mc_wedge_length({b2, b2}, cfg(100000, 18)).covers(2 * pi));
  auto b4 = gaussian_ball_sampler(4);
  CHECK(mc_wedge_length({complex_line_sampler(2), b4, b4}, cfg(100000, 19)).covers(4.0));
  auto zero = unit_sphere_sampler(2, 0.0);
  auto e = mc_wedge_length({zero, b2}, cfg(1000, 20));
  CHECK(e.mean == 0.0);
  CHECK(e.std_error == 0.0);
}

TEST_CASE("Monte-Carlo pairings") {
  const double pi = std::numbers::pi;
  auto s = unit_sphere_sampler(2);
  CHECK(mc_pairing(s, s, cfg(100000, 21)).covers(2 / pi));
  auto a = fixed_sampler(SimpleVector<double>(2, {{0, 1}})), b = fixed_sampler(SimpleVector<double>(2, {{1, 0}}));
  CHECK(mc_pairing(a, b, cfg(100, 22)).mean == 0.0);
  auto e = mc_pairing(schubert_sampler({2}, 2, 2), schubert_sampler({1, 1}, 2, 2), cfg(10000, 23));
  CHECK(std::fabs(e.max_value) < 1e-10);
}

TEST_CASE("discrete samplers agree with the exact wedge") {
  std::vector<SimpleVector<double>> va{SimpleVector<double>(3, {{1, 0, 0}}), SimpleVector<double>(3, {{1, 2, 0}}),
                                       SimpleVector<double>(3, {{0, 1, 1}})};
  std::vector<SimpleVector<double>> vb{SimpleVector<double>(3, {{0, 0, 1}}), SimpleVector<double>(3, {{2, -1, 1}})};
  std::vector<double> wa{1.0, 0.5, 2.0}, wb{1.5, 1.0};
  VirtualZonoid<double> za(3, 1), zb(3, 1);
  for (std::size_t i = 0; i < va.size(); ++i) za.add_atom(wa[i], va[i]);
  for (std::size_t i = 0; i < vb.size(); ++i) zb.add_atom(wb[i], vb[i]);
  const double exact = length(wedge(za, zb));
  auto e = mc_wedge_length({discrete_sampler(3, 1, wa, va), discrete_sampler(3, 1, wb, vb)}, cfg(100000, 24));
  CHECK(e.covers(exact));
  const double ex2 = length(wedge(std::vector<VirtualZonoid<double>>{za, zb, za}));
  auto e2 = mc_wedge_length({discrete_sampler(3, 1, wa, va), discrete_sampler(3, 1, wb, vb), discrete_sampler(3, 1, wa, va)},
                            cfg(100000, 25));
  CHECK(e2.covers(ex2));
}
