#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zonoid/sampling.hpp"

namespace zonoid {

// Weakly decreasing parts, trailing zeros removed.
using YoungDiagram = std::vector<int>;

YoungDiagram normalize(YoungDiagram lambda);
int size(const YoungDiagram& lambda);
bool fits(const YoungDiagram& lambda, int k, int m);
YoungDiagram transpose(const YoungDiagram& lambda);
YoungDiagram dual(const YoungDiagram& lambda, int k, int m);
// 1-based (row, column) of the removable corner boxes.
std::vector<std::pair<int, int>> outer_corners(const YoungDiagram& lambda);
std::vector<YoungDiagram> diagrams_in_rectangle(int k, int m, int size);
std::string to_string(const YoungDiagram& lambda);
// "2,1" or "" (empty diagram).
YoungDiagram parse_diagram(const std::string& text);

SimpleVector<double> v_lambda(const YoungDiagram& lambda, int k, int m);

using LRTable = std::map<YoungDiagram, long>;
LRTable lr_coefficients(const YoungDiagram& lambda, const YoungDiagram& mu);
std::vector<YoungDiagram> lr_set(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int m);

Integer schur_dim(const YoungDiagram& lambda, int k);
Integer span_dim(const YoungDiagram& lambda, int k, int m);

struct OrbitCheck {
  YoungDiagram lambda;
  int rank = 0;
  long expected = 0;
};

struct WedgeCheck {
  YoungDiagram lambda, mu;
  int rank = 0;
  long expected = 0;
};

struct SpanReport {
  int k = 0, m = 0, d = 0;
  std::vector<OrbitCheck> orbits;
  double max_cross_inner = 0.0;
  long total_rank = 0;
  std::vector<WedgeCheck> wedges;
  bool ok = false;
};

// Samples the orbits h.v_lambda for all lambda of size d and the products
// h.v_lambda ^ h'.v_mu with |lambda| + |mu| = d.
SpanReport verify_span_decomposition(int k, int m, int d, int samples, double tol, std::uint64_t seed);

// E || h_1 v_{lambda_1} ^ ... ^ h_s v_{lambda_s} ||, independent h_i.
Estimate mc_schubert_shape(const std::vector<YoungDiagram>& lambdas, int k, int m, const McConfig& cfg);

bool duality_nonvanishing(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int m);

struct Edeg22Report {
  Estimate result;
  Estimate e4, d11, d22, d3, d4;
};

// Expected degree edeg(2,4), with the unknown Schubert volumes eliminated
// through the deterministic unit counts in G(2,2):  E4 sqrt(D11 D22) / (D3 D4).
Edeg22Report edeg22_calibrated(const McConfig& cfg);

// (2/3) pi^{-1/2} (pi^2/4)^m m^{-1/2}
double asymptotic_edeg2(int m);

}  // namespace zonoid
