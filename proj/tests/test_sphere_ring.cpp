#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zonoid/sampling.hpp"
#include "zonoid/sphere_ring.hpp"

using namespace zonoid;

namespace {
PiScalar pi_pow(Rational c, Rational e) { return PiScalar(c, e); }
}  // namespace

TEST_CASE("kappa") {
  CHECK(kappa(0) == PiScalar(1));
  CHECK(kappa(2) == pi_pow(1, 1));
  CHECK(kappa(4) == pi_pow(frac(1, 2), 2));
  CHECK(kappa(3) == pi_pow(frac(4, 3), 1));
  CHECK(kappa(1) == PiScalar(2));
  for (long n = 0; n <= 30; ++n) CHECK(kappa(n) == kappa_recursive(n));
  for (long n = 1; n <= 12; ++n)
    CHECK(kappa(n).to_double() == doctest::Approx(std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1)));
}

TEST_CASE("ball lengths") {
  CHECK(ball_length(3) == PiScalar(4));
  CHECK(ball_length(2) == pi_pow(1, 1));
  CHECK(ball_length(1) == PiScalar(2));
  // the closed form and the ball lemma at i = 1 agree
  for (long n = 1; n <= 12; ++n) CHECK(ball_length(n) == ball_wedge_length(n, 0, 1, PiScalar(1)));
}

TEST_CASE("ball_wedge_length examples") {
  CHECK(ball_wedge_length(2, 0, 2, PiScalar(1)) == pi_pow(2, 1));
  CHECK(ball_wedge_length(4, 2, 2, pi_pow(2, -1)) == PiScalar(4));
  CHECK(ball_wedge_length(5, 2, 0, pi_pow(3, 1)) == pi_pow(3, 1));
  CHECK_THROWS_AS(ball_wedge_length(3, 2, 2, PiScalar(1)), std::domain_error);
}

TEST_CASE("expected counts on spheres") {
  CHECK(sphere_expected_count(2, {1, 1}, {frac(1, 2), frac(1, 2)}) == PiScalar(2));
  CHECK(sphere_expected_count(2, {1, 1}, {frac(1, 2), Rational(0)}) == PiScalar(0));
  // a single subset of codimension n is just its relative volume times vol(S^n) / vol(point)
  CHECK(sphere_expected_count(1, {1}, {frac(1, 4)}).to_double() == doctest::Approx(0.25 * sphere_volume(1).to_double()));
  CHECK(sphere_expected_count(2, {1, 1}, std::vector<double>{0.5, 0.5}) == doctest::Approx(2.0));
  // relative volumes of great subspheres in S^3: vol(S^2)/vol(S^3) = 2/pi, vol(S^1)/vol(S^3) = 1/pi
  const double pi = std::numbers::pi;
  CHECK(sphere_expected_count(3, {1, 1, 1}, std::vector<double>{2 / pi, 2 / pi, 2 / pi}) == doctest::Approx(2.0));
  CHECK(sphere_expected_count(3, {2, 1}, std::vector<double>{1 / pi, 2 / pi}) == doctest::Approx(2.0));
  // the same planes in RP^3 meet once
  CHECK(sphere_expected_count(3, {1, 1, 1}, std::vector<double>{2 / pi, 2 / pi, 2 / pi}, true) == doctest::Approx(1.0));
  CHECK_THROWS(sphere_expected_count(2, {1, 2}, {Rational(1), Rational(1)}));
}

TEST_CASE("volumes") {
  CHECK(sphere_volume(2) == pi_pow(4, 1));
  CHECK(sphere_volume(1) == pi_pow(2, 1));
  CHECK(projective_space_volume(2) == pi_pow(2, 1));
}

TEST_CASE("sphere ring arithmetic") {
  auto b1 = SphereRingElement::beta_power(3, 1);
  auto b2 = b1 * b1;
  CHECK(b2 == SphereRingElement::beta_power(3, 2));
  CHECK((b2 * b2).coeffs == std::vector<Rational>(4, 0));
  auto l = (b1 + b2).lengths();
  CHECK(l[1] == ball_wedge_length(3, 0, 1, PiScalar(1)));
  CHECK(l[2] == ball_wedge_length(3, 0, 2, PiScalar(1)));
  CHECK(l[0] == PiScalar(0));
}

TEST_CASE("property: Monte-Carlo ball wedges match the ball lemma") {
  McConfig c;
  c.samples = 20000;
  for (int N = 1; N <= 4; ++N)
    for (int i = 1; i <= N; ++i) {
      c.seed = 100 * N + i;
      std::vector<SamplerZonoid> zs(i, gaussian_ball_sampler(N));
      CHECK(mc_wedge_length(zs, c).covers(ball_wedge_length(N, 0, i, PiScalar(1)).to_double()));
    }
}
