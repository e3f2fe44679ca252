#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonoid/rational.hpp"

using namespace zonoid;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/6") == frac(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("-0.125") == frac(-1, 8));
  CHECK(parse_rational("2.50") == frac(5, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("integer helpers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 7) == 0);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
  Rational r;
  CHECK(exact_sqrt(frac(9, 4), r));
  CHECK(r == frac(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), r));
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    DenseMatrix<Rational> m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = frac(d(gen), 1 + std::abs(d(gen)));
    CHECK(determinant_exact(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("solve_exact and rank_exact") {
  DenseMatrix<Rational> a{{2, 1}, {1, 3}};
  auto x = solve_exact(a, {Rational(3), Rational(5)});
  CHECK(x[0] == frac(4, 5));
  CHECK(x[1] == frac(7, 5));
  CHECK_THROWS_AS(solve_exact({{1, 2}, {2, 4}}, {Rational(1), Rational(1)}), std::domain_error);
  CHECK(rank_exact({{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank_exact({{1, 0}, {0, 1}, {1, 1}}) == 2);
  auto mins = leading_minors({{6, 2}, {2, 1}});
  CHECK(mins[0] == 6);
  CHECK(mins[1] == 2);
}
