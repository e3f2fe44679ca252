#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

#include "zonoid/exterior.hpp"

namespace zonoid {

// SplitMix64 stream keyed by (seed, trial, slot).  Every Monte-Carlo trial
// derives its own streams, so results do not depend on how trials are
// scheduled across workers.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot);
  explicit Rng(std::uint64_t seed) : Rng(seed, 0, 0) {}

  std::uint64_t next_u64();
  double uniform();  // in [0, 1)
  double normal();   // Box-Muller

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t mix64(std::uint64_t x);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_value = 0.0;  // largest single-trial value, used for exact-vanishing checks

  double lower(double z = 3.0) const { return mean - z * std_error; }
  double upper(double z = 3.0) const { return mean + z * std_error; }
  bool covers(double value, double z = 3.0) const;
};

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency
};

// Runs trial(t) for t = 0..samples-1.  Trials are grouped in fixed-size chunks
// whose statistics are merged in chunk order, so the mean is independent of
// the worker count.
Estimate monte_carlo(const McConfig& cfg, const std::function<double(std::uint64_t trial)>& trial);

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng);
Eigen::MatrixXcd haar_unitary_complex(int n, Rng& rng);

// 2n x 2n real matrix of a unitary, coordinates interleaved (Re z1, Im z1, Re z2, ...).
Eigen::MatrixXd realify(const Eigen::MatrixXcd& u);
Eigen::MatrixXd haar_unitary(int n, Rng& rng);
// Complex structure J: (x, y) -> (-y, x) per coordinate pair.
Eigen::MatrixXd complex_structure(int n);

std::vector<double> gaussian_vector(int n, Rng& rng);
std::vector<double> sphere_vector(int n, Rng& rng);

// (g e1, g (i e1)) for a uniform unit vector g e1 of C^n, realified.
SimpleVector<double> sample_complex_line(int n, Rng& rng);

using Diagram = std::vector<int>;
// wedge over boxes (i,j) of lambda (row-major) of Q e_i (x) R f_j in R^{km}, index i*m + j.
SimpleVector<double> sample_schubert(const Diagram& lambda, int k, int m, Rng& rng);
SimpleVector<double> schubert_vector(const Diagram& lambda, int k, int m, const Eigen::MatrixXd& q,
                                     const Eigen::MatrixXd& r);

// scale * K(xi), xi drawn by `draw`.
struct SamplerZonoid {
  double scale = 1.0;
  int ambient = 0;
  int degree = 0;
  std::function<SimpleVector<double>(Rng&)> draw;
};

SamplerZonoid gaussian_ball_sampler(int n);                // unit ball B_n, scale sqrt(2 pi)
SamplerZonoid unit_sphere_sampler(int n, double scale = 1.0);
SamplerZonoid fixed_sampler(const SimpleVector<double>& v, double scale = 1.0);
SamplerZonoid complex_line_sampler(int n);                 // gamma_n, scale n / pi
SamplerZonoid schubert_sampler(const Diagram& lambda, int k, int m, double scale = 1.0);
// A discrete zonoid as a sampler: atoms drawn proportionally to their weights.
SamplerZonoid discrete_sampler(int ambient, int degree, const std::vector<double>& weights,
                               const std::vector<SimpleVector<double>>& vectors);

Estimate mc_length(const SamplerZonoid& z, const McConfig& cfg);
Estimate mc_wedge_length(const std::vector<SamplerZonoid>& zs, const McConfig& cfg);
Estimate mc_pairing(const SamplerZonoid& a, const SamplerZonoid& b, const McConfig& cfg);

}  // namespace zonoid
