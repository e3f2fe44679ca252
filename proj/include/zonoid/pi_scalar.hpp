#pragma once

#include <string>

#include "zonoid/rational.hpp"

namespace zonoid {

// coeff * pi^pi_exp, exact.
struct PiScalar {
  Rational coeff;
  Rational pi_exp;

  PiScalar() = default;
  PiScalar(Rational c, Rational e = 0) : coeff(std::move(c)), pi_exp(std::move(e)) { normalize(); }

  static PiScalar pi_power(const Rational& e) { return PiScalar(1, e); }

  bool is_zero() const { return coeff == 0; }
  double to_double() const;
  std::string str() const;

  PiScalar& operator*=(const PiScalar& o);
  PiScalar& operator/=(const PiScalar& o);
  // Only defined at equal exponent (or when one side is zero).
  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);

  void normalize() {
    coeff.canonicalize();
    pi_exp.canonicalize();
    if (coeff == 0) pi_exp = 0;
  }
};

PiScalar operator*(PiScalar a, const PiScalar& b);
PiScalar operator/(PiScalar a, const PiScalar& b);
PiScalar operator+(PiScalar a, const PiScalar& b);
PiScalar operator-(PiScalar a, const PiScalar& b);
PiScalar operator-(PiScalar a);
bool operator==(const PiScalar& a, const PiScalar& b);
inline bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

// Gamma(n/2) for n >= 1, as rational * pi^{0 or 1/2}.
PiScalar gamma_half(long n);

}  // namespace zonoid
