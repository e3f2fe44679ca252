#include "zonoid/pi_scalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zonoid {

double PiScalar::to_double() const {
  if (coeff == 0) return 0.0;
  return coeff.get_d() * std::pow(std::numbers::pi, pi_exp.get_d());
}

std::string PiScalar::str() const {
  if (pi_exp == 0) return to_string(coeff);
  return to_string(coeff) + "*pi^(" + to_string(pi_exp) + ")";
}

PiScalar& PiScalar::operator*=(const PiScalar& o) {
  coeff *= o.coeff;
  pi_exp += o.pi_exp;
  normalize();
  return *this;
}

PiScalar& PiScalar::operator/=(const PiScalar& o) {
  if (o.coeff == 0) throw std::domain_error("PiScalar division by zero");
  coeff /= o.coeff;
  pi_exp -= o.pi_exp;
  normalize();
  return *this;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  if (o.coeff == 0) return *this;
  if (coeff == 0) {
    *this = o;
    return *this;
  }
  if (pi_exp != o.pi_exp)
    throw std::domain_error("PiScalar addition at different pi exponents: " + str() + " + " + o.str());
  coeff += o.coeff;
  normalize();
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) { return *this += -o; }

PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
PiScalar operator/(PiScalar a, const PiScalar& b) { return a /= b; }
PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
PiScalar operator-(PiScalar a) {
  a.coeff = -a.coeff;
  return a;
}

bool operator==(const PiScalar& a, const PiScalar& b) { return a.coeff == b.coeff && a.pi_exp == b.pi_exp; }

PiScalar gamma_half(long n) {
  if (n < 1) throw std::domain_error("gamma_half needs n >= 1");
  if (n % 2 == 0) return PiScalar(Rational(factorial(n / 2 - 1)));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const long k = (n - 1) / 2;
  Integer four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return PiScalar(frac(factorial(2 * k), four_k * factorial(k)), frac(1, 2));
}

}  // namespace zonoid
