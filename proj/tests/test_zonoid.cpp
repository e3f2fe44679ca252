#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "oracles.hpp"
#include "zonoid/zonoid.hpp"

using namespace zonoid;

namespace {

using QZ = VirtualZonoid<Rational>;
using FZ = VirtualZonoid<double>;

QZ square() {
  QZ z(2, 1);
  z.add_atom(1, SimpleVector<Rational>(2, {{1, 0}}));
  z.add_atom(1, SimpleVector<Rational>(2, {{0, 1}}));
  return z;
}

ExteriorElement<Rational> vec(std::vector<Rational> v) {
  ExteriorElement<Rational> e(static_cast<int>(v.size()), 1);
  for (int i = 0; i < static_cast<int>(v.size()); ++i) e.add({i}, v[i]);
  return e;
}

// Random discrete zonoid with small integer generators (weights folded in).
QZ random_zonotope(std::mt19937& gen, int n, int atoms) {
  std::uniform_int_distribution<int> c(-3, 3);
  QZ z(n, 1);
  for (int a = 0; a < atoms; ++a) {
    std::vector<Rational> v(n);
    bool nonzero = false;
    for (auto& x : v) {
      x = c(gen);
      nonzero |= x != 0;
    }
    if (!nonzero) v[0] = 1;
    z.add_atom(1, SimpleVector<Rational>(n, {v}));
  }
  return z;
}

std::vector<oracle::Pt> generators(const QZ& z) {
  std::vector<oracle::Pt> g;
  for (const auto& a : z.atoms) {
    oracle::Pt p;
    for (const auto& x : a.v.factors[0]) p.push_back(Rational(a.w * x).get_d());
    g.push_back(p);
  }
  return g;
}

FZ to_float(const QZ& z) {
  FZ f(z.ambient, z.degree);
  for (const auto& a : z.atoms) {
    std::vector<std::vector<double>> fs;
    for (const auto& v : a.v.factors) {
      fs.emplace_back();
      for (const auto& x : v) fs.back().push_back(x.get_d());
    }
    f.add_atom(a.w.get_d(), SimpleVector<double>(z.ambient, fs));
  }
  for (const auto& [k, v] : z.center.coords) f.center.add(k, v.get_d());
  return f;
}

std::vector<QZ> star_exp(const QZ& m) {
  std::vector<QZ> out;
  for (const auto& p : exp_truncated(m, m.ambient)) out.push_back(hodge_dual(p));
  return out;
}

}  // namespace

TEST_CASE("support examples") {
  auto s = segment<Rational>({1, 0});
  CHECK(support(s, std::vector<Rational>{1, 0}) == frac(1, 2));
  CHECK(support(square(), std::vector<Rational>{1, 1}) == 1);
  QZ c(2, 1);
  c.center = vec({1, 0});
  CHECK(support(c, std::vector<Rational>{1, 0}) == 1);
}

TEST_CASE("length examples") {
  QZ z(2, 1);
  z.add_atom(1, SimpleVector<Rational>(2, {{3, 4}}));
  CHECK(length(z) == 5);
  QZ w(2, 1);
  w.add_atom(2, SimpleVector<Rational>(2, {{1, 0}}));
  w.add_atom(1, SimpleVector<Rational>(2, {{0, 1}}));
  CHECK(length(w) == 3);
  QZ irr(2, 1);
  irr.add_atom(1, SimpleVector<Rational>(2, {{1, 1}}));
  CHECK_THROWS_AS(length(irr), std::domain_error);
}

TEST_CASE("wedge examples") {
  auto a = segment<Rational>({1, 0}), b = segment<Rational>({0, 1});
  auto ab = wedge(a, b);
  REQUIRE(ab.atoms.size() == 1);
  CHECK(ab.atoms[0].w == 1);
  CHECK(length(ab) == 1);
  CHECK(length(wedge(square(), square())) == 2);
  CHECK(wedge(a, a).atoms.empty());
}

TEST_CASE("mixed volume examples") {
  CHECK(mixed_volume<Rational>({segment<Rational>({1, 0}), segment<Rational>({0, 1})}) == frac(1, 2));
  CHECK(mixed_volume<Rational>({square(), square()}) == 1);
  CHECK(mixed_volume<Rational>({square(), QZ(2, 1)}) == 0);
  CHECK_THROWS_AS(mixed_volume<Rational>({square()}), std::invalid_argument);
}

TEST_CASE("intrinsic volume examples") {
  CHECK(intrinsic_volume(segment<Rational>({1, 0}), 1) == 1);
  CHECK(intrinsic_volume(square(), 2) == 1);
  CHECK(intrinsic_volume(square(), 1) == 2);
  CHECK(intrinsic_volume(square(), 0) == 1);
  // unit cube: V_1 = 3, V_2 = 3, V_3 = 1
  QZ cube(3, 1);
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> v(3, 0);
    v[i] = 1;
    cube.add_atom(1, SimpleVector<Rational>(3, {v}));
  }
  CHECK(intrinsic_volume(cube, 1) == 3);
  CHECK(intrinsic_volume(cube, 2) == 3);
  CHECK(intrinsic_volume(cube, 3) == 1);
}

TEST_CASE("pairing examples") {
  auto a = segment<Rational>({1, 0}), b = segment<Rational>({0, 1});
  CHECK(pairing(a, a) == 1);
  CHECK(pairing(a, b) == 0);
  QZ k(2, 1);
  k.add_atom(1, SimpleVector<Rational>(2, {{1, 1}}));
  CHECK(pairing(k, a) == 2 * support(k, std::vector<Rational>{1, 0}));
  CHECK(pairing(k, a) == 1);
}

TEST_CASE("exponential examples") {
  auto e = exp_truncated(segment<Rational>({1, 0}), 2);
  REQUIRE(e.size() == 3);
  CHECK(length(e[0]) == 1);
  CHECK(length(e[1]) == 1);
  CHECK(length(e[2]) == 0);
  CHECK(length(exp_truncated(square(), 2)[2]) == 1);
  auto z = exp_truncated(QZ(2, 1), 2);
  CHECK(length(z[0]) == 1);
  CHECK(length(z[1]) == 0);
}

TEST_CASE("crofton examples") {
  auto l = wedge(segment<Rational>({1, 0}), segment<Rational>({0, 1}));
  CHECK(crofton_evaluate(l, square()) == 1);
  CHECK(crofton_evaluate(QZ(2, 2), square()) == 0);
  CHECK(crofton_evaluate(star_exp(segment<Rational>({1, 0})), square()) == 2);
}

TEST_CASE("hodge dual example") {
  auto d = hodge_dual(segment<Rational>({1, 0}));
  REQUIRE(d.atoms.size() == 1);
  CHECK(d.degree == 1);
  CHECK(abs(d.atoms[0].w * d.atoms[0].v.factors[0][1]) == 1);
  CHECK(d.atoms[0].v.factors[0][0] == 0);
}

TEST_CASE("property: support is additive under Minkowski sums") {
  std::mt19937 gen(21);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    auto a = random_zonotope(gen, n, 3), b = random_zonotope(gen, n, 2);
    std::vector<Rational> u(n);
    for (auto& x : u) x = frac(c(gen), 1 + std::abs(c(gen)));
    CHECK(support(minkowski_sum(a, b), u) == support(a, u) + support(b, u));
  }
}

TEST_CASE("property: translations leave length and mixed volume unchanged") {
  std::mt19937 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_zonotope(gen, 2, 3), b = random_zonotope(gen, 2, 2);
    const Rational mv = mixed_volume<Rational>({a, b});
    auto at = translate(a, vec({frac(trial, 3), -2}));
    auto bt = translate(b, vec({5, frac(1, 7)}));
    CHECK(mixed_volume<Rational>({at, bt}) == mv);
    CHECK(length(to_float(at)) == length(to_float(a)));
  }
}

TEST_CASE("property: volume from wedge powers matches a brute-force hull") {
  std::mt19937 gen(23);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const int m = n + trial % 3;
    FZ z(n, 1);
    std::vector<oracle::Pt> gens;
    for (int a = 0; a < m; ++a) {
      std::vector<double> v(n);
      for (auto& x : v) x = nd(gen);
      const double w = 0.5 + std::abs(nd(gen));
      z.add_atom(w, SimpleVector<double>(n, {v}));
      oracle::Pt p;
      for (double x : v) p.push_back(w * x);
      gens.push_back(p);
    }
    const double vol = length(wedge(std::vector<FZ>(n, z))) / factorial_as<double>(n);
    CHECK(vol == doctest::Approx(oracle::zonotope_volume(gens)).epsilon(1e-10));
  }
}

TEST_CASE("property: star of the exponential evaluates to the volume of the sum") {
  std::mt19937 gen(24);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 2 + trial % 2;
    auto l1 = random_zonotope(gen, n, 1 + trial % 2), l2 = random_zonotope(gen, n, 1);
    auto k = random_zonotope(gen, n, 2 + trial % 2);
    auto total = minkowski_sum(minkowski_sum(k, l1), l2);
    const Rational lhs = crofton_evaluate(star_exp(minkowski_sum(l1, l2)), k);
    CHECK(lhs.get_d() == doctest::Approx(oracle::zonotope_volume(generators(total))).epsilon(1e-10));
  }
}

TEST_CASE("pairing Gram matrices of segments can be indefinite") {
  // four equally spaced directions in the plane: |cos| has a negative mode
  const double c = std::sqrt(0.5);
  std::vector<std::vector<double>> dirs{{1, 0}, {c, c}, {0, 1}, {-c, c}};
  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g(i, j) = pairing(segment<double>(dirs[i]), segment<double>(dirs[j]));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
  CHECK(es.eigenvalues()(0) == doctest::Approx(1.0 - std::sqrt(2.0)));
  CHECK(g.isApprox(g.transpose()));
  // three directions at 60 degrees stay positive definite
  Eigen::Matrix3d h;
  std::vector<std::vector<double>> d3{{1, 0}, {0.5, std::sqrt(0.75)}, {-0.5, std::sqrt(0.75)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = pairing(segment<double>(d3[i]), segment<double>(d3[j]));
  CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(h).eigenvalues()(0) > 0.0);
}
