#pragma once

#include <stdexcept>
#include <vector>

#include "zonoid/exterior.hpp"
#include "zonoid/sphere_ring.hpp"

namespace zonoid {

// Norm of a simple vector.  Exact mode needs a rational norm (e.g. top degree,
// where the norm is |det|); otherwise the irrational value cannot be kept exact.
inline double atom_norm(const SimpleVector<double>& v) { return norm(v); }

inline Rational atom_norm(const SimpleVector<Rational>& v) {
  Rational g = wedge_inner(v, v), r;
  if (!exact_sqrt(g, r))
    throw std::domain_error("norm " + to_string(g) + "^(1/2) is irrational; use floating-point mode");
  return r;
}

inline bool negligible(double x) { return std::fabs(x) < 1e-14; }
inline bool negligible(const Rational& x) { return x == 0; }

template <class T>
struct Atom {
  T w;
  SimpleVector<T> v;
};

// sum_i w_i * 1/2 [-v_i, v_i] + center
template <class T>
struct VirtualZonoid {
  int ambient = 0;
  int degree = 0;
  std::vector<Atom<T>> atoms;
  ExteriorElement<T> center;

  VirtualZonoid() = default;
  VirtualZonoid(int n, int d) : ambient(n), degree(d), center(n, d) {}

  VirtualZonoid& add_atom(T w, SimpleVector<T> v) {
    if (v.ambient != ambient || v.degree() != degree) throw std::invalid_argument("atom has wrong degree or ambient dimension");
    atoms.push_back({std::move(w), std::move(v)});
    return *this;
  }
  bool genuine() const {
    for (const auto& a : atoms)
      if (a.w < 0) return false;
    return true;
  }
};

// The scalar 1 as a degree-0 zonoid.
template <class T>
VirtualZonoid<T> unit_zonoid(int n) {
  VirtualZonoid<T> z(n, 0);
  z.add_atom(T(1), SimpleVector<T>(n, {}));
  return z;
}

// Segment zonoid 1/2 [-v, v] in degree one.
template <class T>
VirtualZonoid<T> segment(const std::vector<T>& v, T w = T(1)) {
  VirtualZonoid<T> z(static_cast<int>(v.size()), 1);
  z.add_atom(w, SimpleVector<T>(static_cast<int>(v.size()), {v}));
  return z;
}

template <class T>
T support(const VirtualZonoid<T>& z, const ExteriorElement<T>& u) {
  if (u.ambient != z.ambient || u.degree != z.degree) throw std::invalid_argument("support: degree mismatch");
  T h = dot(z.center, u);
  for (const auto& a : z.atoms) h += a.w * abs_value(dot(expand(a.v), u)) / T(2);
  return h;
}

template <class T>
T support(const VirtualZonoid<T>& z, const std::vector<T>& u) {
  ExteriorElement<T> e(static_cast<int>(u.size()), 1);
  for (int i = 0; i < static_cast<int>(u.size()); ++i) e.add({i}, u[i]);
  return support(z, e);
}

template <class T>
T length(const VirtualZonoid<T>& z) {
  T s = 0;
  for (const auto& a : z.atoms) s += a.w * atom_norm(a.v);
  return s;
}

template <class T>
VirtualZonoid<T> minkowski_sum(const VirtualZonoid<T>& a, const VirtualZonoid<T>& b) {
  if (a.ambient != b.ambient || a.degree != b.degree) throw std::invalid_argument("minkowski_sum: degree mismatch");
  VirtualZonoid<T> out = a;
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  out.center = a.center + b.center;
  return out;
}

template <class T>
VirtualZonoid<T> scale(VirtualZonoid<T> z, const T& c) {
  for (auto& a : z.atoms) a.w *= c;
  z.center = scaled(z.center, c);
  return z;
}

template <class T>
VirtualZonoid<T> translate(VirtualZonoid<T> z, const ExteriorElement<T>& c) {
  z.center = z.center + c;
  return z;
}

// Atoms multiply; the center follows Z(x ^ y) = K(x ^ y) + 1/2 E(x) ^ E(y), i.e. 2 c1 ^ c2.
template <class T>
VirtualZonoid<T> wedge(const VirtualZonoid<T>& a, const VirtualZonoid<T>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("wedge: ambient mismatch");
  if (a.degree + b.degree > a.ambient) throw std::invalid_argument("wedge: degree overflow");
  VirtualZonoid<T> out(a.ambient, a.degree + b.degree);
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms) {
      SimpleVector<T> v = concat(std::vector<SimpleVector<T>>{x.v, y.v});
      if constexpr (std::is_same_v<T, double>) {
        if (negligible(norm(v))) continue;
      } else {
        if (wedge_inner(v, v) == 0) continue;
      }
      out.atoms.push_back({x.w * y.w, std::move(v)});
    }
  out.center = scaled(wedge(a.center, b.center), T(2));
  return out;
}

template <class T>
VirtualZonoid<T> wedge(const std::vector<VirtualZonoid<T>>& zs) {
  if (zs.empty()) throw std::invalid_argument("wedge: empty list");
  VirtualZonoid<T> out = zs.front();
  for (std::size_t i = 1; i < zs.size(); ++i) out = wedge(out, zs[i]);
  return out;
}

template <class T>
T factorial_as(int n);
template <>
inline double factorial_as<double>(int n) {
  return factorial(n).get_d();
}
template <>
inline Rational factorial_as<Rational>(int n) {
  return Rational(factorial(n));
}

template <class T>
T rational_as(const Rational& q);
template <>
inline double rational_as<double>(const Rational& q) {
  return q.get_d();
}
template <>
inline Rational rational_as<Rational>(const Rational& q) {
  return q;
}

template <class T>
T mixed_volume(const std::vector<VirtualZonoid<T>>& zs) {
  if (zs.empty()) throw std::invalid_argument("mixed_volume: empty list");
  const int n = zs.front().ambient;
  if (static_cast<int>(zs.size()) != n) throw std::invalid_argument("mixed_volume needs exactly n zonoids in R^n");
  for (const auto& z : zs)
    if (z.degree != 1 || z.ambient != n) throw std::invalid_argument("mixed_volume needs degree-one zonoids in R^n");
  return length(wedge(zs)) / factorial_as<T>(n);
}

// Degree-d part of e^L is the sum over d-subsets of atoms (1/d! L^d with the
// repeated factors vanishing and the d! orderings collapsed).
template <class T>
std::vector<VirtualZonoid<T>> exp_truncated(const VirtualZonoid<T>& L, int max_degree) {
  if (L.degree != 1) throw std::invalid_argument("exp_truncated needs a degree-one zonoid");
  if (max_degree < 0 || max_degree > L.ambient) throw std::invalid_argument("exp_truncated: bad max degree");
  std::vector<VirtualZonoid<T>> out;
  out.push_back(unit_zonoid<T>(L.ambient));
  const int m = static_cast<int>(L.atoms.size());
  for (int d = 1; d <= max_degree; ++d) {
    VirtualZonoid<T> part(L.ambient, d);
    for (const auto& idx : subsets(m, d)) {
      std::vector<SimpleVector<T>> vs;
      T w = 1;
      for (int i : idx) {
        vs.push_back(L.atoms[i].v);
        w *= L.atoms[i].w;
      }
      SimpleVector<T> v = concat(vs);
      if constexpr (std::is_same_v<T, double>) {
        if (negligible(norm(v))) continue;
      } else {
        if (wedge_inner(v, v) == 0) continue;
      }
      part.atoms.push_back({w, std::move(v)});
    }
    if (d == 1) part.center = L.center;
    out.push_back(std::move(part));
  }
  return out;
}

template <class T>
T pairing(const VirtualZonoid<T>& a, const VirtualZonoid<T>& b) {
  if (a.ambient != b.ambient || a.degree != b.degree) throw std::invalid_argument("pairing: degree mismatch");
  T s = 0;
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms) s += x.w * y.w * abs_value(wedge_inner(x.v, y.v));
  return s;
}

// V_d = binom(n,d)/kappa_{n-d} MV(Z[d], B[n-d]) with the ball factor in closed form.
template <class T>
T intrinsic_volume(const VirtualZonoid<T>& z, int d) {
  if (z.degree != 1) throw std::invalid_argument("intrinsic_volume needs a degree-one zonoid");
  if (!z.genuine()) throw std::invalid_argument("intrinsic_volume needs nonnegative weights");
  const int n = z.ambient;
  if (d < 0 || d > n) throw std::invalid_argument("intrinsic_volume: d out of range");
  if (d == 0) return T(1);
  std::vector<VirtualZonoid<T>> parts(d, z);
  const T ell = length(wedge(parts));
  PiScalar factor = PiScalar(Rational(binomial(n, d))) / kappa(n - d) *
                    ball_wedge_length(n, d, n - d, PiScalar(1)) / PiScalar(Rational(factorial(n)));
  if (factor.pi_exp != 0) throw std::logic_error("intrinsic_volume: ball factor did not cancel");
  return rational_as<T>(factor.coeff) * ell;
}

template <class T>
T crofton_evaluate(const VirtualZonoid<T>& L, const VirtualZonoid<T>& K) {
  if (K.degree != 1) throw std::invalid_argument("crofton_evaluate: K must have degree one");
  if (L.ambient != K.ambient) throw std::invalid_argument("crofton_evaluate: ambient mismatch");
  if (L.degree > L.ambient) throw std::invalid_argument("crofton_evaluate: degree overflow");
  auto e = exp_truncated(K, L.degree);
  return pairing(L, e[L.degree]);
}

// Graded L = sum_d L_d, evaluated degree by degree.
template <class T>
T crofton_evaluate(const std::vector<VirtualZonoid<T>>& L, const VirtualZonoid<T>& K) {
  T s = 0;
  for (const auto& part : L) s += crofton_evaluate(part, K);
  return s;
}

// *K(x) = K(*x), with the star of each atom refactored as a simple vector.
template <class T>
VirtualZonoid<T> hodge_dual(const VirtualZonoid<T>& z, int orientation = 1) {
  const int n = z.ambient, d = z.degree;
  VirtualZonoid<T> out(n, n - d);
  for (const auto& a : z.atoms) {
    ExteriorElement<T> star = hodge_star(expand(a.v), orientation);
    if (star.is_zero()) continue;
    if (n - d == 0) {
      out.atoms.push_back({a.w * abs_value(star.at({})), SimpleVector<T>(n, {})});
      continue;
    }
    auto w = nullspace(a.v.factors, n);
    if (static_cast<int>(w.size()) != n - d) throw std::logic_error("hodge_dual: unexpected nullspace dimension");
    SimpleVector<T> sv(n, w);
    ExteriorElement<T> ew = expand(sv);
    // rescale the first factor so the expansions agree
    auto best = star.coords.begin();
    for (auto it = star.coords.begin(); it != star.coords.end(); ++it)
      if (abs_value(it->second) > abs_value(best->second)) best = it;
    const T c = best->second / ew.at(best->first);
    for (auto& x : sv.factors.front()) x *= c;
    out.atoms.push_back({a.w, std::move(sv)});
  }
  out.center = hodge_star(z.center, orientation);
  return out;
}

}  // namespace zonoid
