#include "zonoid/sphere_ring.hpp"

#include <stdexcept>

namespace zonoid {

PiScalar kappa(long n) {
  if (n < 0) throw std::domain_error("kappa: negative dimension");
  if (n == 0) return PiScalar(1);
  // 2 pi^{n/2} / (n Gamma(n/2))
  return PiScalar(2, frac(n, 2)) / (PiScalar(n) * gamma_half(n));
}

PiScalar kappa_recursive(long n) {
  if (n < 0) throw std::domain_error("kappa: negative dimension");
  if (n == 0) return PiScalar(1);
  if (n == 1) return PiScalar(2);
  return PiScalar(frac(2, n), 1) * kappa_recursive(n - 2);
}

PiScalar ball_length(long n) {
  if (n < 1) throw std::domain_error("ball_length: n >= 1 required");
  return PiScalar(2, frac(1, 2)) * gamma_half(n + 1) / gamma_half(n);
}

PiScalar ball_wedge_length(long N, long d, long i, const PiScalar& ell_z) {
  if (d < 0 || i < 0) throw std::domain_error("ball_wedge_length: negative degree");
  if (d + i > N) throw std::domain_error("ball_wedge_length: degree overflow");
  Rational falling = frac(factorial(N - d), factorial(N - d - i));
  return PiScalar(falling) * kappa(N - d) / kappa(N - d - i) * ell_z;
}

PiScalar sphere_volume(long n) { return PiScalar(n + 1) * kappa(n + 1); }
PiScalar projective_space_volume(long n) { return PiScalar(frac(1, 2)) * sphere_volume(n); }

PiScalar sphere_expected_count(long n, const std::vector<long>& codims, const std::vector<Rational>& ratios,
                               bool projective) {
  if (codims.size() != ratios.size()) throw std::invalid_argument("codims and ratios differ in length");
  long total = 0;
  for (long d : codims) {
    if (d < 0) throw std::invalid_argument("negative codimension");
    total += d;
  }
  if (total != n) throw std::invalid_argument("codimensions must sum to n");
  PiScalar out = projective ? projective_space_volume(n) : sphere_volume(n);
  out *= ball_wedge_length(n, 0, n, PiScalar(1));
  for (std::size_t k = 0; k < codims.size(); ++k) {
    if (ratios[k] < 0) throw std::invalid_argument("volume ratios must be nonnegative");
    out /= ball_wedge_length(n, 0, codims[k], PiScalar(1));
    out *= PiScalar(ratios[k]);
  }
  return out;
}

double sphere_expected_count(long n, const std::vector<long>& codims, const std::vector<double>& ratios,
                             bool projective) {
  std::vector<Rational> ones(ratios.size(), Rational(1));
  double v = sphere_expected_count(n, codims, ones, projective).to_double();
  for (double r : ratios) {
    if (r < 0) throw std::invalid_argument("volume ratios must be nonnegative");
    v *= r;
  }
  return v;
}

SphereRingElement::SphereRingElement(long n_) : n(n_), coeffs(static_cast<std::size_t>(n_ + 1)) {
  if (n_ < 0) throw std::domain_error("sphere ring needs n >= 0");
}

SphereRingElement SphereRingElement::beta_power(long n, long i) {
  SphereRingElement e(n);
  if (i >= 0 && i <= n) e.coeffs[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::vector<PiScalar> SphereRingElement::lengths() const {
  std::vector<PiScalar> out;
  for (long i = 0; i <= n; ++i) out.push_back(PiScalar(coeffs[i]) * ball_wedge_length(n, 0, i, PiScalar(1)));
  return out;
}

SphereRingElement operator*(const SphereRingElement& a, const SphereRingElement& b) {
  if (a.n != b.n) throw std::invalid_argument("sphere ring elements of different n");
  SphereRingElement out(a.n);
  for (long i = 0; i <= a.n; ++i)
    for (long j = 0; i + j <= a.n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

SphereRingElement operator+(const SphereRingElement& a, const SphereRingElement& b) {
  if (a.n != b.n) throw std::invalid_argument("sphere ring elements of different n");
  SphereRingElement out = a;
  for (long i = 0; i <= a.n; ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

bool operator==(const SphereRingElement& a, const SphereRingElement& b) { return a.n == b.n && a.coeffs == b.coeffs; }

}  // namespace zonoid
