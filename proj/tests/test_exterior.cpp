#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonoid/exterior.hpp"

using namespace zonoid;

namespace {

SimpleVector<Rational> rand_simple(std::mt19937& gen, int n, int d) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<std::vector<Rational>> fs(d, std::vector<Rational>(n));
  for (auto& f : fs)
    for (auto& x : f) x = frac(c(gen), 1 + std::abs(c(gen)));
  return SimpleVector<Rational>(n, fs);
}

ExteriorElement<Rational> rand_element(std::mt19937& gen, int n, int d) {
  std::uniform_int_distribution<int> c(-4, 4);
  ExteriorElement<Rational> x(n, d);
  for (const auto& s : subsets(n, d)) x.add(s, frac(c(gen), 1 + std::abs(c(gen))));
  return x;
}

}  // namespace

TEST_CASE("wedge_norm examples") {
  SimpleVector<double> e1(2, {{1, 0}}), e2(2, {{0, 1}}), a(2, {{1, 1}});
  CHECK(wedge_norm({e1, e2}) == doctest::Approx(1.0));
  CHECK(wedge_norm({e1, e1}) == doctest::Approx(0.0));
  CHECK(wedge_norm({e1, a}) == doctest::Approx(1.0));
}

TEST_CASE("wedge_inner examples") {
  SimpleVector<Rational> e12(3, {{1, 0, 0}, {0, 1, 0}}), e13(3, {{1, 0, 0}, {0, 0, 1}}), f(3, {{1, 0, 1}, {0, 1, 0}});
  CHECK(wedge_inner(e12, e12) == 1);
  CHECK(wedge_inner(e12, e13) == 0);
  CHECK(wedge_inner(e12, f) == 1);
}

TEST_CASE("expand examples") {
  auto x = expand(SimpleVector<Rational>(3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(x.coords.size() == 1);
  CHECK(x.at({0, 1}) == 1);
  auto y = expand(SimpleVector<Rational>(3, {{1, 1, 0}, {0, 1, 1}}));
  CHECK(y.at({0, 1}) == 1);
  CHECK(y.at({0, 2}) == 1);
  CHECK(y.at({1, 2}) == 1);
  auto z = expand(SimpleVector<Rational>(3, {}));
  CHECK(z.degree == 0);
  CHECK(z.at({}) == 1);
}

TEST_CASE("hodge_star examples") {
  ExteriorElement<Rational> e12(3, 2), e23(3, 2), one(2, 0);
  e12.add({0, 1}, 1);
  e23.add({1, 2}, 1);
  one.add({}, 1);
  auto a = hodge_star(e12);
  CHECK(a.at({2}) == 1);
  CHECK(a.coords.size() == 1);
  CHECK(hodge_star(e23).at({0}) == 1);
  CHECK(hodge_star(one).at({0, 1}) == 1);
  CHECK(hodge_star(e12, -1).at({2}) == -1);
}

TEST_CASE("span_rank examples") {
  SimpleVector<double> e1(3, {{1, 0, 0}}), e2(3, {{0, 1, 0}}), s(3, {{1, 1, 0}});
  CHECK(span_rank(std::vector<SimpleVector<double>>{e1, e2, s}) == 2);
  CHECK(span_rank(std::vector<SimpleVector<double>>{SimpleVector<double>(3, {{1, 0, 0}, {0, 1, 0}})}) == 1);
}

TEST_CASE("property: Gram determinant identity and isometry of expand") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const int d = 1 + trial % n;
    auto a = rand_simple(gen, n, d), b = rand_simple(gen, n, d);
    // <a,b> = det of the mixed Gram matrix, computed here by cofactors
    std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < n; ++k) g[i][j] += a.factors[i][k] * b.factors[j][k];
    const Rational inner = oracle::cofactor_det(g);
    CHECK(wedge_inner(a, b) == inner);
    CHECK(dot(expand(a), expand(b)) == inner);
    CHECK(wedge_inner(a, a) == oracle::gram_det(a.factors));
  }
}

TEST_CASE("property: wedge_norm squared equals the Gram determinant of the concatenation") {
  std::mt19937 gen(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<SimpleVector<double>> parts;
    std::vector<std::vector<double>> all;
    int used = 0;
    while (used < n - 1) {
      const int d = std::min(1 + trial % 2, n - 1 - used);
      std::vector<std::vector<double>> fs(d, std::vector<double>(n));
      for (auto& f : fs)
        for (auto& x : f) x = nd(gen);
      for (auto& f : fs) all.push_back(f);
      parts.emplace_back(n, fs);
      used += d;
    }
    const double w = wedge_norm(parts);
    const double g = oracle::gram_det(all);
    CHECK(w * w == doctest::Approx(g).epsilon(1e-12));
    CHECK(w * w == doctest::Approx(wedge_norm_sq(parts)).epsilon(1e-12));
  }
}

TEST_CASE("property: star is an isometry and satisfies <x,y> vol = x ^ *y") {
  std::mt19937 gen(9);
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      auto x = rand_element(gen, n, d), y = rand_element(gen, n, d);
      auto sx = hodge_star(x), sy = hodge_star(y);
      CHECK(dot(sx, sy) == dot(x, y));
      CHECK(volume_coefficient(wedge(x, sy)) == dot(x, y));
      auto ssx = hodge_star(sx);
      const int sign = (d * (n - d)) % 2 == 0 ? 1 : -1;
      CHECK(ssx.coords == scaled(x, Rational(sign)).coords);
    }
}

TEST_CASE("coordinate cap") {
  CHECK_THROWS_AS(check_coordinate_cap(40, 20), std::length_error);
  CHECK_NOTHROW(check_coordinate_cap(16, 8));
}

TEST_CASE("nullspace of a full-rank row set") {
  auto ns = nullspace<Rational>({{1, 1, 0}, {0, 1, 1}}, 3);
  REQUIRE(ns.size() == 1);
  const auto& v = ns[0];
  CHECK(v[0] + v[1] == 0);
  CHECK(v[1] + v[2] == 0);
  CHECK(v[0] != 0);
}
