#pragma once

#include <vector>

#include "zonoid/pi_scalar.hpp"

namespace zonoid {

// Volume of the unit ball in R^n (kappa_0 = 1).
PiScalar kappa(long n);
// Same constant through kappa_n = (2 pi / n) kappa_{n-2}; used as a cross-check.
PiScalar kappa_recursive(long n);

// Length of the unit ball B_n, 2 sqrt(pi) Gamma((n+1)/2) / Gamma(n/2).
PiScalar ball_length(long n);

// l(Z ^ B^{^i}) for Z of degree d in R^N.
PiScalar ball_wedge_length(long N, long d, long i, const PiScalar& ell_z);

PiScalar sphere_volume(long n);             // vol(S^n) = (n+1) kappa_{n+1}
PiScalar projective_space_volume(long n);   // vol(RP^n) = vol(S^n) / 2

// Expected number of points in g_1 Y_1 cap ... cap g_s Y_s on S^n (or RP^n).
// codims sum to n; ratios are vol(Y_i) / vol(M).
PiScalar sphere_expected_count(long n, const std::vector<long>& codims, const std::vector<Rational>& ratios,
                               bool projective = false);
double sphere_expected_count(long n, const std::vector<long>& codims, const std::vector<double>& ratios,
                             bool projective = false);

// Element of R[beta]/(beta^{n+1}).
struct SphereRingElement {
  long n = 0;
  std::vector<Rational> coeffs;  // coeffs[i] multiplies beta^i, size n+1

  SphereRingElement() = default;
  explicit SphereRingElement(long n_);
  static SphereRingElement beta_power(long n, long i);

  // Per-degree lengths l(beta^i) = l(B^{^i}) with B the ball of the tangent space R^n.
  std::vector<PiScalar> lengths() const;
};

SphereRingElement operator*(const SphereRingElement& a, const SphereRingElement& b);
SphereRingElement operator+(const SphereRingElement& a, const SphereRingElement& b);
bool operator==(const SphereRingElement& a, const SphereRingElement& b);

}  // namespace zonoid
