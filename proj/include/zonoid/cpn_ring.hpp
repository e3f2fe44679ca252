#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zonoid/exterior.hpp"
#include "zonoid/pi_scalar.hpp"
#include "zonoid/sampling.hpp"

namespace zonoid {

// Rescaled generators t = pi^{-2/3} beta, s = pi^{2/3} gamma.  Elements are
// pi^{pi_exp} * sum c_{d,j} s^j t^{d-2j}; the global pi factor lets classes
// such as x_R beta^2 + x_C gamma stay exact.
struct RingElement {
  int n = 1;
  Rational pi_exp = 0;
  std::map<std::pair<int, int>, Rational> coeffs;  // (degree d, j) -> coefficient

  RingElement() = default;
  explicit RingElement(int n_) : n(n_) {}

  static RingElement one(int n);
  static RingElement s(int n);
  static RingElement t(int n);
  static RingElement beta(int n);   // pi^{2/3} t
  static RingElement gamma(int n);  // pi^{-2/3} s
  // Reduced form of the raw monomial s^j t^i.
  static RingElement monomial(int n, int j, int i);

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(int d, int j) const;
  void add(int d, int j, const Rational& c);
  std::vector<int> degrees() const;
};

RingElement operator*(const RingElement& a, const RingElement& b);
// Addition requires equal pi factors unless one side is zero.
RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator*(const Rational& c, const RingElement& a);
bool operator==(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, int k);
RingElement multiply(const RingElement& a, const RingElement& b);

// J(n,d) = {0 .. min(floor(d/2), floor((2n-d)/2))}; dimension is its size.
int basis_max_j(int n, int d);
int dimension(int n, int d);

// Integer Hankel matrix binom(2(n-j-k), n-j-k), j,k in J(n,d).
DenseMatrix<Rational> hankel_matrix(int n, int d);

// l(gamma^j beta^i) through the ball lemma; zero beyond the top degree.
PiScalar gamma_beta_length(int n, int j, int i);
// l(gamma^j beta^{2(d-j)}) in the closed even-degree form.
PiScalar monomial_length(int n, int j, int d_half);
// l(s^j t^i).
PiScalar st_length(int n, int j, int i);

// Per-degree lengths (degree, value).
std::vector<std::pair<int, PiScalar>> length(const RingElement& e);
// Length of a homogeneous element (zero for the zero element).
PiScalar homogeneous_length(const RingElement& e);

struct GammaBetaTerm {
  int gamma_pow;
  int beta_pow;
  PiScalar coeff;
};

struct Relation {
  int index = 0;                                   // F_index
  std::map<std::pair<int, int>, Rational> st;      // (s power, t power) -> coefficient, leading term 1
  std::vector<GammaBetaTerm> gamma_beta;           // leading term 1, sorted by descending gamma power
  RingElement in_ring(int n) const;                // F evaluated in H_E(CP^n)
};

Relation relation(int index);
// (F_n, F_{n+1}), generating the relation ideal of H_E(CP^n).
std::pair<Relation, Relation> relations(int n);

// Matrix of x -> t^{2(n-d)} x from degree d to degree 2n-d in the monomial bases.
DenseMatrix<Rational> lefschetz_matrix(int n, int d);
// Primitive dimension: kernel of t^{2n-2d+1} on degree d.
int primitive_dims(int n, int d);

// x_R beta^2 + x_C gamma.
PiScalar codim2_x_real(int n, const Rational& d_x, const Rational& delta_x);
Rational codim2_x_complex(int n, const Rational& d_x, const Rational& delta_x);
RingElement class_codim2(int n, const Rational& d_x, const Rational& delta_x);
Rational self_intersection_codim2(int n, const Rational& d_x, const Rational& delta_x);
// (pi^n / n!) l(alpha^n) through the ring.
Rational self_intersection_via_ring(int n, const Rational& d_x, const Rational& delta_x);

Integer f_k(int k);

PiScalar intersection_number(const RingElement& alpha, int j);

double tasaki_kernel_d2(int n, double x, double y);
Rational tasaki_kernel_d2(int n, const Rational& x, const Rational& y);
// n * E_h |<h V_x, V_y>| with V_x = span{e1, sqrt(x) i e1 + sqrt(1-x) e2}; the
// factor n normalizes the kernel to 1 on complex lines.
Estimate mc_tasaki_kernel_d2(int n, double x, double y, const McConfig& cfg);
// E_h || h V_x ^ V_y ||, reported for comparison.
Estimate mc_tasaki_wedge_d2(int n, double x, double y, const McConfig& cfg);
SimpleVector<double> tasaki_plane(int n, double x);

// omega^k / k! with omega = sum_j e_{2j} ^ e_{2j+1} in R^{2n}.
ExteriorElement<Rational> omega_element(int n, int k);
Rational omega_norm_sq(int n, int k);

}  // namespace zonoid
