#include "zonoid/cpn_ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zonoid/sphere_ring.hpp"

namespace zonoid {

namespace {

Rational pow_q(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

Rational central_binomial(int m) { return m < 0 ? Rational(0) : Rational(binomial(2 * m, m)); }

// Coefficients over J(n,D) of the raw monomial s^J t^{D-2J}.  A monomial
// already indexed by J(n,D) is a basis element; otherwise its coordinates
// are fixed by the pairing against all complementary basis monomials, a
// positive definite Hankel system.
std::map<int, Rational> reduce(int n, int J, int D) {
  std::map<int, Rational> out;
  if (J < 0 || 2 * J > D) throw std::invalid_argument("reduce: not a monomial");
  if (D > 2 * n) return out;
  const int top = basis_max_j(n, D);
  if (J <= top) {
    out[J] = 1;
    return out;
  }
  const int m = top + 1;
  DenseMatrix<Rational> h(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) h[j][k] = central_binomial(n - j - k);
    rhs[k] = central_binomial(n - J - k);
  }
  auto c = solve_exact(h, rhs);
  for (int j = 0; j < m; ++j)
    if (c[j] != 0) out[j] = c[j];
  return out;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("CP^n ring needs n >= 1");
}

}  // namespace

int basis_max_j(int n, int d) {
  if (d < 0 || d > 2 * n) return -1;
  return std::min(d / 2, (2 * n - d) / 2);
}

int dimension(int n, int d) { return basis_max_j(n, d) + 1; }

DenseMatrix<Rational> hankel_matrix(int n, int d) {
  check_n(n);
  if (d < 0 || d > 2 * n) throw std::invalid_argument("hankel_matrix: degree out of range");
  const int m = dimension(n, d);
  DenseMatrix<Rational> h(m, std::vector<Rational>(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) h[j][k] = central_binomial(n - j - k);
  return h;
}

RingElement RingElement::one(int n) { return monomial(n, 0, 0); }
RingElement RingElement::s(int n) { return monomial(n, 1, 0); }
RingElement RingElement::t(int n) { return monomial(n, 0, 1); }

RingElement RingElement::beta(int n) {
  RingElement e = t(n);
  if (!e.is_zero()) e.pi_exp = frac(2, 3);
  return e;
}

RingElement RingElement::gamma(int n) {
  RingElement e = s(n);
  if (!e.is_zero()) e.pi_exp = frac(-2, 3);
  return e;
}

RingElement RingElement::monomial(int n, int j, int i) {
  check_n(n);
  if (j < 0 || i < 0) throw std::invalid_argument("monomial: negative exponent");
  RingElement e(n);
  const int d = 2 * j + i;
  for (const auto& [jj, c] : reduce(n, j, d)) e.add(d, jj, c);
  return e;
}

Rational RingElement::coeff(int d, int j) const {
  auto it = coeffs.find({d, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

void RingElement::add(int d, int j, const Rational& c) {
  if (j < 0 || j > basis_max_j(n, d)) throw std::logic_error("coefficient outside the basis index range");
  if (c == 0) return;
  auto& slot = coeffs[{d, j}];
  slot += c;
  if (slot == 0) coeffs.erase({d, j});
  if (coeffs.empty()) pi_exp = 0;
}

std::vector<int> RingElement::degrees() const {
  std::vector<int> ds;
  for (const auto& [k, c] : coeffs)
    if (ds.empty() || ds.back() != k.first) ds.push_back(k.first);
  return ds;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (a.n != b.n) throw std::invalid_argument("multiply: elements of different rings");
  RingElement out(a.n);
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      const int d = ka.first + kb.first, j = ka.second + kb.second;
      for (const auto& [jj, c] : reduce(a.n, j, d)) out.add(d, jj, ca * cb * c);
    }
  if (!out.is_zero()) out.pi_exp = a.pi_exp + b.pi_exp;
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.n != b.n) throw std::invalid_argument("sum of elements of different rings");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_exp != b.pi_exp) throw std::domain_error("sum of ring elements with different pi factors");
  RingElement out = a;
  for (const auto& [k, c] : b.coeffs) out.add(k.first, k.second, c);
  if (!out.is_zero()) out.pi_exp = a.pi_exp;
  return out;
}

RingElement operator*(const Rational& c, const RingElement& a) {
  if (c == 0) return RingElement(a.n);
  RingElement out = a;
  for (auto& [k, v] : out.coeffs) v *= c;
  return out;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + Rational(-1) * b; }

bool operator==(const RingElement& a, const RingElement& b) {
  return a.n == b.n && a.coeffs == b.coeffs && (a.is_zero() || a.pi_exp == b.pi_exp);
}

RingElement power(const RingElement& a, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  RingElement out = RingElement::one(a.n);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

PiScalar gamma_beta_length(int n, int j, int i) {
  check_n(n);
  if (j < 0 || i < 0) throw std::invalid_argument("negative exponent");
  if (j > n || 2 * j + i > 2 * n) return PiScalar(0);
  // l(gamma^j) = pi^{-j} n!/(n-j)!, then i balls in the remaining 2n-2j directions
  PiScalar ell_gamma(frac(factorial(n), factorial(n - j)), -j);
  return ball_wedge_length(2 * n, 2 * j, i, ell_gamma);
}

PiScalar monomial_length(int n, int j, int d_half) {
  check_n(n);
  if (j < 0 || j > d_half || d_half > n) return PiScalar(0);
  const int d = d_half;
  Rational c = frac(factorial(n) * factorial(n - d), factorial(2 * (n - d)));
  return PiScalar(c * central_binomial(n - j), d - 2 * j);
}

PiScalar st_length(int n, int j, int i) {
  PiScalar l = gamma_beta_length(n, j, i);
  if (l.is_zero()) return l;
  return l * PiScalar(1, frac(2 * j - 2 * i, 3));
}

std::vector<std::pair<int, PiScalar>> length(const RingElement& e) {
  std::map<int, PiScalar> per;
  for (const auto& [k, c] : e.coeffs) {
    const auto [d, j] = k;
    per[d] += PiScalar(c) * st_length(e.n, j, d - 2 * j) * PiScalar(1, e.pi_exp);
  }
  return {per.begin(), per.end()};
}

PiScalar homogeneous_length(const RingElement& e) {
  auto ls = length(e);
  if (ls.empty()) return PiScalar(0);
  if (ls.size() > 1) throw std::invalid_argument("length of an inhomogeneous element; use the per-degree form");
  return ls.front().second;
}

RingElement Relation::in_ring(int n) const {
  RingElement out(n);
  for (const auto& [k, c] : st) out = out + c * RingElement::monomial(n, k.first, k.second);
  return out;
}

Relation relation(int index) {
  check_n(index);
  const int n = index;
  const int p = (index + 1) / 2;
  const int tpow = index % 2 == 0 ? 1 : 0;
  const int D = index + 1;
  Relation r;
  r.index = index;
  r.st[{p, tpow}] = 1;
  for (const auto& [j, c] : reduce(n, p, D)) r.st[{j, D - 2 * j}] -= c;
  // back to beta, gamma: s^a t^b = pi^{(2a-2b)/3} gamma^a beta^b, normalized at the leading term
  const Rational lead_exp(2 * p - 2 * tpow, 3);
  for (const auto& [k, c] : r.st) {
    if (c == 0) continue;
    r.gamma_beta.push_back({k.first, k.second, PiScalar(c, frac(2 * k.first - 2 * k.second, 3) - lead_exp)});
  }
  std::sort(r.gamma_beta.begin(), r.gamma_beta.end(),
            [](const GammaBetaTerm& a, const GammaBetaTerm& b) { return a.gamma_pow > b.gamma_pow; });
  return r;
}

std::pair<Relation, Relation> relations(int n) { return {relation(n), relation(n + 1)}; }

DenseMatrix<Rational> lefschetz_matrix(int n, int d) {
  check_n(n);
  if (d < 0 || d > n) throw std::invalid_argument("lefschetz_matrix: 0 <= d <= n");
  const int m = dimension(n, d);
  const int target = 2 * n - d;
  DenseMatrix<Rational> a(dimension(n, target), std::vector<Rational>(m));
  for (int j = 0; j < m; ++j)
    for (const auto& [jj, c] : reduce(n, j, target)) a[jj][j] = c;
  return a;
}

int primitive_dims(int n, int d) {
  check_n(n);
  if (d < 0 || d > n) throw std::invalid_argument("primitive_dims: 0 <= d <= n");
  const int m = dimension(n, d);
  const int target = 2 * n - d + 1;
  if (target > 2 * n) return m;
  DenseMatrix<Rational> a(dimension(n, target), std::vector<Rational>(m));
  for (int j = 0; j < m; ++j)
    for (const auto& [jj, c] : reduce(n, j, target)) a[jj][j] = c;
  return m - rank_exact(a);
}

PiScalar codim2_x_real(int n, const Rational& d_x, const Rational& delta_x) {
  (void)d_x;
  if (n < 2) throw std::invalid_argument("codim-2 classes need n >= 2");
  return PiScalar(-frac(n, 2 * (n - 1)) * delta_x, -2);
}

Rational codim2_x_complex(int n, const Rational& d_x, const Rational& delta_x) {
  if (n < 2) throw std::invalid_argument("codim-2 classes need n >= 2");
  return d_x + frac(n, n - 1) * delta_x;
}

RingElement class_codim2(int n, const Rational& d_x, const Rational& delta_x) {
  // x_R beta^2 + x_C gamma = pi^{-2/3} (x_C s - n/(2(n-1)) Delta t^2)
  RingElement out = codim2_x_complex(n, d_x, delta_x) * RingElement::s(n) +
                    (-frac(n, 2 * (n - 1)) * delta_x) * RingElement::monomial(n, 0, 2);
  if (!out.is_zero()) out.pi_exp = frac(-2, 3);
  return out;
}

Rational self_intersection_codim2(int n, const Rational& d_x, const Rational& delta_x) {
  if (n < 2) throw std::invalid_argument("codim-2 classes need n >= 2");
  const Rational r = frac(n, 2 * (n - 1));
  Rational sum = 0;
  for (int k = 0; 2 * k <= n; ++k)
    sum += Rational(binomial(n, 2 * k) * binomial(2 * k, k)) * pow_q(r, 2 * k) * pow_q(d_x, n - 2 * k) *
           pow_q(delta_x, 2 * k);
  return sum;
}

Rational self_intersection_via_ring(int n, const Rational& d_x, const Rational& delta_x) {
  PiScalar l = homogeneous_length(power(class_codim2(n, d_x, delta_x), n));
  PiScalar v = PiScalar(Rational(1) / Rational(factorial(n)), n) * l;
  if (v.is_zero()) return 0;
  if (v.pi_exp != 0) throw std::logic_error("self intersection kept a pi factor");
  return v.coeff;
}

Integer f_k(int k) {
  if (k < 0) throw std::invalid_argument("f_k: k >= 0");
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k - j));
    Integer term = binomial(k, j) * binomial(2 * j, j) * two;
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

PiScalar intersection_number(const RingElement& alpha, int j) {
  if (j < 0) throw std::invalid_argument("intersection_number: j >= 0");
  return homogeneous_length(alpha * power(RingElement::gamma(alpha.n), j));
}

double tasaki_kernel_d2(int n, double x, double y) {
  if (n < 2) throw std::invalid_argument("tasaki kernel needs n >= 2");
  return 0.25 * ((1 + x) * (1 + y) + static_cast<double>(n) / (n - 1) * (1 - x) * (1 - y));
}

Rational tasaki_kernel_d2(int n, const Rational& x, const Rational& y) {
  if (n < 2) throw std::invalid_argument("tasaki kernel needs n >= 2");
  return frac(1, 4) * ((1 + x) * (1 + y) + frac(n, n - 1) * (1 - x) * (1 - y));
}

SimpleVector<double> tasaki_plane(int n, double x) {
  if (n < 2) throw std::invalid_argument("tasaki planes need n >= 2");
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0,1]");
  std::vector<double> a(2 * n, 0.0), b(2 * n, 0.0);
  a[0] = 1.0;
  b[1] = std::sqrt(x);        // i e1
  b[2] = std::sqrt(1.0 - x);  // e2
  return SimpleVector<double>(2 * n, {a, b});
}

namespace {

SimpleVector<double> apply(const Eigen::MatrixXd& g, const SimpleVector<double>& v) {
  std::vector<std::vector<double>> fs;
  for (const auto& f : v.factors) {
    Eigen::VectorXd x = g * Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(f.size()));
    fs.emplace_back(x.data(), x.data() + x.size());
  }
  return SimpleVector<double>(v.ambient, std::move(fs));
}

}  // namespace

Estimate mc_tasaki_kernel_d2(int n, double x, double y, const McConfig& cfg) {
  const auto vx = tasaki_plane(n, x), vy = tasaki_plane(n, y);
  return monte_carlo(cfg, [&](std::uint64_t t) {
    Rng rng(cfg.seed, t, 0);
    return n * std::fabs(wedge_inner(apply(haar_unitary(n, rng), vx), vy));
  });
}

Estimate mc_tasaki_wedge_d2(int n, double x, double y, const McConfig& cfg) {
  const auto vx = tasaki_plane(n, x), vy = tasaki_plane(n, y);
  return monte_carlo(cfg, [&](std::uint64_t t) {
    Rng rng(cfg.seed, t, 0);
    return wedge_norm({apply(haar_unitary(n, rng), vx), vy});
  });
}

ExteriorElement<Rational> omega_element(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("omega_element: 0 <= k <= n");
  ExteriorElement<Rational> omega(2 * n, 2);
  for (int j = 0; j < n; ++j) omega.add({2 * j, 2 * j + 1}, 1);
  ExteriorElement<Rational> out(2 * n, 0);
  out.add({}, 1);
  for (int i = 0; i < k; ++i) out = wedge(out, omega);
  return scaled(out, Rational(Rational(1) / Rational(factorial(k))));
}

Rational omega_norm_sq(int n, int k) {
  auto w = omega_element(n, k);
  return dot(w, w);
}

}  // namespace zonoid
