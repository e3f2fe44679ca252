#include "zonoid/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace zonoid {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot) {
  state_ = mix64(mix64(mix64(seed) ^ trial) ^ (slot * 0xd1b54a32d192ed03ULL));
}

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

bool Estimate::covers(double value, double z) const {
  if (std_error == 0.0) return std::fabs(value - mean) <= 1e-12 * std::max(1.0, std::fabs(value));
  return std::fabs(value - mean) <= z * std_error;
}

namespace {

constexpr std::uint64_t kChunk = 4096;

struct ChunkStats {
  double n = 0, mean = 0, m2 = 0, max = -INFINITY;
};

}  // namespace

Estimate monte_carlo(const McConfig& cfg, const std::function<double(std::uint64_t)>& trial) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  const std::uint64_t chunks = (cfg.samples + kChunk - 1) / kChunk;
  std::vector<ChunkStats> stats(chunks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&]() {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      ChunkStats s;
      const std::uint64_t lo = c * kChunk, hi = std::min(cfg.samples, lo + kChunk);
      for (std::uint64_t t = lo; t < hi; ++t) {
        const double x = trial(t);
        s.n += 1;
        const double delta = x - s.mean;
        s.mean += delta / s.n;
        s.m2 += delta * (x - s.mean);
        s.max = std::max(s.max, x);
      }
      stats[c] = s;
    }
  };

  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Chan et al. merge, in chunk order.
  ChunkStats tot;
  for (const auto& s : stats) {
    if (s.n == 0) continue;
    const double n = tot.n + s.n;
    const double delta = s.mean - tot.mean;
    tot.mean += delta * s.n / n;
    tot.m2 += s.m2 + delta * delta * tot.n * s.n / n;
    tot.n = n;
    tot.max = std::max(tot.max, s.max);
  }
  Estimate e;
  e.mean = tot.mean;
  e.samples = cfg.samples;
  e.seed = cfg.seed;
  e.max_value = tot.max;
  e.std_error = tot.n > 1 ? std::sqrt(tot.m2 / (tot.n - 1) / tot.n) : 0.0;
  return e;
}

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_orthogonal: n >= 1");
  Eigen::MatrixXd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  for (int j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

Eigen::MatrixXcd haar_unitary_complex(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n >= 1");
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal(), im = rng.normal();
      g(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> r = qr.matrixQR()(j, j);
    const double a = std::abs(r);
    if (a > 0) q.col(j) *= r / a;
  }
  return q;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  Eigen::MatrixXd out(2 * n, 2 * u.cols());
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const double a = u(r, c).real(), b = u(r, c).imag();
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = -b;
      out(2 * r + 1, 2 * c) = b;
      out(2 * r + 1, 2 * c + 1) = a;
    }
  return out;
}

Eigen::MatrixXd haar_unitary(int n, Rng& rng) { return realify(haar_unitary_complex(n, rng)); }

Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k + 1, 2 * k) = 1.0;
    j(2 * k, 2 * k + 1) = -1.0;
  }
  return j;
}

std::vector<double> gaussian_vector(int n, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

std::vector<double> sphere_vector(int n, Rng& rng) {
  while (true) {
    auto v = gaussian_vector(n, rng);
    double s = 0;
    for (double x : v) s += x * x;
    if (s == 0) continue;
    s = std::sqrt(s);
    for (auto& x : v) x /= s;
    return v;
  }
}

SimpleVector<double> sample_complex_line(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_complex_line: n >= 1");
  // g e1 for Haar g is a uniform unit vector of C^n = R^{2n}
  std::vector<double> u = sphere_vector(2 * n, rng);
  std::vector<double> ju(2 * n);
  for (int k = 0; k < n; ++k) {
    ju[2 * k] = -u[2 * k + 1];
    ju[2 * k + 1] = u[2 * k];
  }
  return SimpleVector<double>(2 * n, {std::move(u), std::move(ju)});
}

SimpleVector<double> schubert_vector(const Diagram& lambda, int k, int m, const Eigen::MatrixXd& q,
                                     const Eigen::MatrixXd& r) {
  if (static_cast<int>(lambda.size()) > k) throw std::invalid_argument("diagram does not fit the rectangle");
  std::vector<std::vector<double>> fs;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    if (lambda[i] > m || lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("diagram does not fit the rectangle");
    for (int j = 0; j < lambda[i]; ++j) {
      std::vector<double> v(static_cast<std::size_t>(k * m));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < m; ++b) v[a * m + b] = q(a, i) * r(b, j);
      fs.push_back(std::move(v));
    }
  }
  return SimpleVector<double>(k * m, std::move(fs));
}

SimpleVector<double> sample_schubert(const Diagram& lambda, int k, int m, Rng& rng) {
  Eigen::MatrixXd q = haar_orthogonal(k, rng);
  Eigen::MatrixXd r = haar_orthogonal(m, rng);
  return schubert_vector(lambda, k, m, q, r);
}

SamplerZonoid gaussian_ball_sampler(int n) {
  return {std::sqrt(2.0 * std::numbers::pi), n, 1,
          [n](Rng& rng) { return SimpleVector<double>(n, {gaussian_vector(n, rng)}); }};
}

SamplerZonoid unit_sphere_sampler(int n, double scale) {
  return {scale, n, 1, [n](Rng& rng) { return SimpleVector<double>(n, {sphere_vector(n, rng)}); }};
}

SamplerZonoid fixed_sampler(const SimpleVector<double>& v, double scale) {
  return {scale, v.ambient, v.degree(), [v](Rng&) { return v; }};
}

SamplerZonoid complex_line_sampler(int n) {
  return {n / std::numbers::pi, 2 * n, 2, [n](Rng& rng) { return sample_complex_line(n, rng); }};
}

SamplerZonoid schubert_sampler(const Diagram& lambda, int k, int m, double scale) {
  int size = 0;
  for (int p : lambda) size += p;
  return {scale, k * m, size, [lambda, k, m](Rng& rng) { return sample_schubert(lambda, k, m, rng); }};
}

SamplerZonoid discrete_sampler(int ambient, int degree, const std::vector<double>& weights,
                               const std::vector<SimpleVector<double>>& vectors) {
  if (weights.size() != vectors.size() || weights.empty()) throw std::invalid_argument("discrete_sampler: bad atoms");
  std::vector<double> cumulative;
  double total = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("discrete_sampler: negative weight");
    total += w;
    cumulative.push_back(total);
  }
  return {total, ambient, degree, [cumulative, vectors, total](Rng& rng) {
            const double u = rng.uniform() * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const auto i = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), vectors.size() - 1);
            return vectors[i];
          }};
}

Estimate mc_length(const SamplerZonoid& z, const McConfig& cfg) { return mc_wedge_length({z}, cfg); }

Estimate mc_wedge_length(const std::vector<SamplerZonoid>& zs, const McConfig& cfg) {
  if (zs.empty()) throw std::invalid_argument("mc_wedge_length: empty list");
  int total = 0;
  double scale = 1.0;
  for (const auto& z : zs) {
    if (z.ambient != zs.front().ambient) throw std::invalid_argument("mc_wedge_length: ambient mismatch");
    total += z.degree;
    scale *= z.scale;
  }
  if (total > zs.front().ambient) throw std::invalid_argument("mc_wedge_length: degree overflow");
  if (scale == 0.0) {
    Estimate e;
    e.samples = cfg.samples;
    e.seed = cfg.seed;
    return e;
  }
  return monte_carlo(cfg, [&](std::uint64_t t) {
    std::vector<SimpleVector<double>> parts;
    parts.reserve(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
      Rng rng(cfg.seed, t, i);
      parts.push_back(zs[i].draw(rng));
    }
    return scale * wedge_norm(parts);
  });
}

Estimate mc_pairing(const SamplerZonoid& a, const SamplerZonoid& b, const McConfig& cfg) {
  if (a.degree != b.degree || a.ambient != b.ambient) throw std::invalid_argument("mc_pairing: degree mismatch");
  const double scale = a.scale * b.scale;
  return monte_carlo(cfg, [&](std::uint64_t t) {
    Rng ra(cfg.seed, t, 0), rb(cfg.seed, t, 1);
    return scale * std::fabs(wedge_inner(a.draw(ra), b.draw(rb)));
  });
}

}  // namespace zonoid
