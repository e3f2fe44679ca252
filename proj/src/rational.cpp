#include "zonoid/rational.hpp"

#include <stdexcept>

namespace zonoid {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  const auto dot = s.find('.');
  const auto exp = s.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }

  // Decimal literal: mantissa digits over a power of ten.
  std::string mantissa = exp == std::string::npos ? s : s.substr(0, exp);
  long exponent = 0;
  if (exp != std::string::npos) {
    try {
      exponent = std::stol(s.substr(exp + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  bool negative = false;
  if (!mantissa.empty() && mantissa.front() == '-') {
    negative = true;
    mantissa.erase(mantissa.begin());
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal: " + s);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + s);
  Integer num(digits, 10);
  Integer ten = 10;
  Integer den = 1;
  const long shift = exponent - frac_digits;
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift < 0)
    den = p;
  else
    num *= p;
  Rational q = frac(num, den);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  root = frac(a, b);
  root.canonicalize();
  return true;
}

Integer bareiss_determinant(DenseMatrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

namespace {

// Scales each row by the lcm of its denominators.
DenseMatrix<Integer> clear_denominators(const DenseMatrix<Rational>& a, std::vector<Integer>* row_scale) {
  DenseMatrix<Integer> out(a.size());
  if (row_scale) row_scale->assign(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer l = 1;
    for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    out[i].reserve(a[i].size());
    for (const auto& x : a[i]) out[i].push_back(x.get_num() * (l / x.get_den()));
    if (row_scale) (*row_scale)[i] = l;
  }
  return out;
}

}  // namespace

Rational determinant_exact(const DenseMatrix<Rational>& a) {
  std::vector<Integer> scale;
  Integer det = bareiss_determinant(clear_denominators(a, &scale));
  Integer denom = 1;
  for (const auto& s : scale) denom *= s;
  Rational r = frac(det, denom);
  return r;
}

std::vector<Rational> leading_minors(const DenseMatrix<Rational>& a) {
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    DenseMatrix<Rational> sub(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
    minors.push_back(determinant_exact(sub));
  }
  return minors;
}

int rank_exact(const DenseMatrix<Rational>& a) {
  if (a.empty()) return 0;
  DenseMatrix<Integer> m = clear_denominators(a, nullptr);
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<Rational> solve_exact(const DenseMatrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_exact: size mismatch");
  DenseMatrix<Rational> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_exact: matrix not square");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  DenseMatrix<Integer> m = clear_denominators(aug, nullptr);

  // Bareiss forward elimination on the augmented matrix.
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) throw std::domain_error("solve_exact: singular matrix");
      std::swap(m[k], m[swap]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = Rational(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace zonoid
