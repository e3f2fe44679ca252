#include "zonoid/schubert.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zonoid {

YoungDiagram normalize(YoungDiagram lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw std::invalid_argument("negative part in diagram");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw std::invalid_argument("diagram parts must be weakly decreasing");
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

int size(const YoungDiagram& lambda) {
  int s = 0;
  for (int p : lambda) s += p;
  return s;
}

bool fits(const YoungDiagram& lambda, int k, int m) {
  return static_cast<int>(lambda.size()) <= k && (lambda.empty() || lambda.front() <= m);
}

YoungDiagram transpose(const YoungDiagram& lambda) {
  YoungDiagram out;
  if (lambda.empty()) return out;
  for (int j = 0; j < lambda.front(); ++j) {
    int c = 0;
    for (int p : lambda)
      if (p > j) ++c;
    out.push_back(c);
  }
  return out;
}

YoungDiagram dual(const YoungDiagram& lambda, int k, int m) {
  if (!fits(lambda, k, m)) throw std::invalid_argument("diagram does not fit the rectangle");
  YoungDiagram out(k);
  for (int i = 0; i < k; ++i) {
    const int row = k - 1 - i;
    out[i] = m - (row < static_cast<int>(lambda.size()) ? lambda[row] : 0);
  }
  return normalize(out);
}

std::vector<std::pair<int, int>> outer_corners(const YoungDiagram& lambda) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int next = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    if (lambda[i] > next) out.emplace_back(static_cast<int>(i) + 1, lambda[i]);
  }
  return out;
}

std::vector<YoungDiagram> diagrams_in_rectangle(int k, int m, int sz) {
  std::vector<YoungDiagram> out;
  YoungDiagram cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == k) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(sz, m);
  return out;
}

std::string to_string(const YoungDiagram& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

YoungDiagram parse_diagram(const std::string& text) {
  YoungDiagram out;
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t.push_back(c);
  if (t.empty() || t == "0") return out;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty part in diagram '" + text + "'");
    std::size_t pos = 0;
    const int v = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad diagram '" + text + "'");
    out.push_back(v);
  }
  return normalize(out);
}

SimpleVector<double> v_lambda(const YoungDiagram& lambda, int k, int m) {
  if (!fits(lambda, k, m)) throw std::invalid_argument("diagram does not fit the rectangle");
  return schubert_vector(lambda, k, m, Eigen::MatrixXd::Identity(k, k), Eigen::MatrixXd::Identity(m, m));
}

namespace {

// Counts LR tableaux of shape nu/lambda and content mu: rows weakly
// increasing, columns strictly increasing, and the reading word (rows top to
// bottom, each right to left) a lattice word.
long count_lr_tableaux(const YoungDiagram& lambda, const YoungDiagram& nu, const YoungDiagram& mu) {
  std::vector<std::pair<int, int>> cells;  // reading order
  for (int i = 0; i < static_cast<int>(nu.size()); ++i) {
    const int start = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    for (int j = nu[i] - 1; j >= start; --j) cells.emplace_back(i, j);
  }
  std::vector<std::vector<int>> fill(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) fill[i].assign(static_cast<std::size_t>(nu[i]), 0);
  std::vector<int> count(mu.size() + 1, 0);
  long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cells.size()) {
      ++total;
      return;
    }
    const auto [i, j] = cells[pos];
    // right neighbour (already filled) bounds from above
    int hi = static_cast<int>(mu.size());
    if (j + 1 < nu[i]) hi = std::min(hi, fill[i][j + 1]);
    int lo = 1;
    if (i > 0 && j < nu[i - 1]) {
      const int above_start = i - 1 < static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
      if (j >= above_start) lo = fill[i - 1][j] + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      fill[i][j] = v;
      rec(pos + 1);
      fill[i][j] = 0;
      --count[v];
    }
  };
  rec(0);
  return total;
}

bool contains(const YoungDiagram& nu, const YoungDiagram& lambda) {
  if (lambda.size() > nu.size()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return false;
  return true;
}

}  // namespace

LRTable lr_coefficients(const YoungDiagram& lambda0, const YoungDiagram& mu0) {
  const YoungDiagram lambda = normalize(lambda0), mu = normalize(mu0);
  LRTable out;
  const int total = size(lambda) + size(mu);
  const int rows = static_cast<int>(lambda.size() + mu.size());
  const int cols = (lambda.empty() ? 0 : lambda.front()) + (mu.empty() ? 0 : mu.front());
  for (const auto& nu : diagrams_in_rectangle(rows, cols, total)) {
    if (!contains(nu, lambda)) continue;
    const long c = count_lr_tableaux(lambda, nu, mu);
    if (c > 0) out[nu] = c;
  }
  if (total == 0) out[YoungDiagram{}] = 1;
  return out;
}

std::vector<YoungDiagram> lr_set(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int m) {
  std::vector<YoungDiagram> out;
  for (const auto& [nu, c] : lr_coefficients(lambda, mu))
    if (fits(nu, k, m)) out.push_back(nu);
  return out;
}

Integer schur_dim(const YoungDiagram& lambda0, int k) {
  const YoungDiagram lambda = normalize(lambda0);
  if (static_cast<int>(lambda.size()) > k) return 0;
  const YoungDiagram lt = transpose(lambda);
  Rational r = 1;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = (lambda[i] - j - 1) + (lt[j] - i - 1) + 1;
      r *= frac(k + j - i, hook);
    }
  if (r.get_den() != 1) throw std::logic_error("hook-content product is not an integer");
  return r.get_num();
}

Integer span_dim(const YoungDiagram& lambda, int k, int m) { return schur_dim(lambda, k) * schur_dim(transpose(lambda), m); }

namespace {

SimpleVector<double> orbit_sample(const YoungDiagram& lambda, int k, int m, Rng& rng) {
  return sample_schubert(lambda, k, m, rng);
}

}  // namespace

SpanReport verify_span_decomposition(int k, int m, int d, int samples, double tol, std::uint64_t seed) {
  if (k < 1 || m < 1 || d < 0 || d > k * m) throw std::invalid_argument("verify_span_decomposition: bad (k,m,d)");
  check_coordinate_cap(k * m, d);
  SpanReport rep;
  rep.k = k;
  rep.m = m;
  rep.d = d;
  rep.ok = true;
  const auto lambdas = diagrams_in_rectangle(k, m, d);
  std::vector<std::vector<std::vector<double>>> bases;
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    std::vector<ExteriorElement<double>> xs;
    for (int s = 0; s < samples; ++s) {
      Rng rng(seed, static_cast<std::uint64_t>(s), 100 + li);
      xs.push_back(expand(orbit_sample(lambdas[li], k, m, rng)));
    }
    OrbitCheck oc{lambdas[li], span_rank(xs), static_cast<long>(span_dim(lambdas[li], k, m).get_si())};
    rep.ok = rep.ok && oc.rank == oc.expected;
    rep.total_rank += oc.rank;
    rep.orbits.push_back(oc);
    bases.push_back(span_basis(xs));
  }
  for (std::size_t a = 0; a < bases.size(); ++a)
    for (std::size_t b = a + 1; b < bases.size(); ++b)
      for (const auto& x : bases[a])
        for (const auto& y : bases[b]) rep.max_cross_inner = std::max(rep.max_cross_inner, std::fabs(dot(x, y)));
  rep.ok = rep.ok && rep.max_cross_inner < tol;
  rep.ok = rep.ok && rep.total_rank == static_cast<long>(binomial(k * m, d).get_si());

  for (int s1 = 1; 2 * s1 <= d; ++s1) {
    const auto left = diagrams_in_rectangle(k, m, s1), right = diagrams_in_rectangle(k, m, d - s1);
    for (std::size_t a = 0; a < left.size(); ++a)
      for (std::size_t b = 0; b < right.size(); ++b) {
        if (2 * s1 == d && b < a) continue;  // unordered pairs at equal size
        std::vector<ExteriorElement<double>> xs;
        for (int s = 0; s < samples; ++s) {
          Rng r1(seed, static_cast<std::uint64_t>(s), 1000 + 2 * (a * 64 + b));
          Rng r2(seed, static_cast<std::uint64_t>(s), 1001 + 2 * (a * 64 + b));
          SimpleVector<double> v = concat(std::vector<SimpleVector<double>>{orbit_sample(left[a], k, m, r1),
                                                                             orbit_sample(right[b], k, m, r2)});
          xs.push_back(expand(v));
        }
        long expected = 0;
        for (const auto& nu : lr_set(left[a], right[b], k, m)) expected += span_dim(nu, k, m).get_si();
        WedgeCheck wc{left[a], right[b], span_rank(xs), expected};
        rep.ok = rep.ok && wc.rank == wc.expected;
        rep.wedges.push_back(wc);
      }
  }
  return rep;
}

Estimate mc_schubert_shape(const std::vector<YoungDiagram>& lambdas, int k, int m, const McConfig& cfg) {
  int total = 0;
  for (const auto& l : lambdas) {
    if (!fits(l, k, m)) throw std::invalid_argument("diagram " + to_string(l) + " does not fit the rectangle");
    total += size(l);
  }
  if (total > k * m) {
    // the wedge lands beyond the top degree, so every sample is exactly zero
    Estimate zero;
    zero.samples = cfg.samples;
    zero.seed = cfg.seed;
    return zero;
  }
  return monte_carlo(cfg, [&](std::uint64_t t) {
    std::vector<SimpleVector<double>> parts;
    parts.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      Rng rng(cfg.seed, t, i);
      parts.push_back(sample_schubert(lambdas[i], k, m, rng));
    }
    return wedge_norm(parts);
  });
}

bool duality_nonvanishing(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int m) {
  if (!fits(lambda, k, m) || !fits(mu, k, m)) throw std::invalid_argument("diagram does not fit the rectangle");
  if (size(lambda) + size(mu) != k * m) throw std::invalid_argument("sizes must add up to k*m");
  return normalize(mu) == dual(lambda, k, m);
}

Edeg22Report edeg22_calibrated(const McConfig& cfg) {
  auto component = [&](std::vector<YoungDiagram> ls, std::uint64_t tag) {
    McConfig c = cfg;
    c.seed = mix64(cfg.seed ^ (0x5c0b0e27ULL * tag));
    Estimate e = mc_schubert_shape(ls, 2, 2, c);
    e.seed = cfg.seed;
    return e;
  };
  const YoungDiagram box{1}, two{2}, one_one{1, 1};
  Edeg22Report rep;
  rep.e4 = component({box, box, box, box}, 1);
  rep.d11 = component({one_one, one_one}, 2);
  rep.d22 = component({two, two}, 3);
  rep.d3 = component({one_one, box, box}, 4);
  rep.d4 = component({two, box, box}, 5);
  Estimate& r = rep.result;
  r.mean = rep.e4.mean * std::sqrt(rep.d11.mean * rep.d22.mean) / (rep.d3.mean * rep.d4.mean);
  auto rel2 = [](const Estimate& e) { return (e.std_error / e.mean) * (e.std_error / e.mean); };
  // delta method with independent components
  const double rel = rel2(rep.e4) + 0.25 * rel2(rep.d11) + 0.25 * rel2(rep.d22) + rel2(rep.d3) + rel2(rep.d4);
  r.std_error = std::fabs(r.mean) * std::sqrt(rel);
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.max_value = r.mean;
  return rep;
}

double asymptotic_edeg2(int m) {
  if (m < 1) throw std::invalid_argument("asymptotic_edeg2: m >= 1");
  const double pi = std::numbers::pi;
  return 2.0 / 3.0 / std::sqrt(pi) * std::pow(pi * pi / 4.0, m) / std::sqrt(static_cast<double>(m));
}

}  // namespace zonoid
