#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zonoid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a plain decimal literal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);
Integer factorial(long n);

/// Double factorial n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

/// Exact square root when q is the square of a rational, otherwise false.
bool exact_sqrt(const Rational& q, Rational& root);

// Canonical a/b; the two-argument mpq_class constructor does not reduce.
inline Rational frac(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}
inline Rational frac(long a, long b) { return frac(Integer(a), Integer(b)); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Gram-style determinant helpers used by the exterior kernel and the ring
/// solver.  Matrices are dense row-major vectors of rows.
template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss determinant over the integers.
Integer bareiss_determinant(DenseMatrix<Integer> m);

/// Exact solve of a nonsingular system A x = b.  The matrix is cleared of
/// denominators and eliminated fraction-free; throws std::domain_error when
/// A is singular.
std::vector<Rational> solve_exact(const DenseMatrix<Rational>& a, const std::vector<Rational>& b);

Rational determinant_exact(const DenseMatrix<Rational>& a);

/// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1.
std::vector<Rational> leading_minors(const DenseMatrix<Rational>& a);

/// Exact rank of a (possibly rectangular) rational matrix.
int rank_exact(const DenseMatrix<Rational>& a);

}  // namespace zonoid
