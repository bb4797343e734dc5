#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace wpvol::mc {

enum class EllSampling {
  Uniform,     // l ~ U(0, L1), weight L1
  Quadrature,  // exact Gauss-Legendre integral over l; only angles are sampled
};

struct McOptions {
  std::uint64_t samples = 1000000;  // per sampled tree
  std::uint64_t seed = 42;
  bool enforce_delaunay = true;
  EllSampling ell = EllSampling::Uniform;
};

struct TreeEstimate {
  std::string part;  // "htc" or "full"
  std::string key;
  std::uint64_t plane_embeddings = 0;
  double closed_weight = 0.0;  // everything except the sampled factors
  std::uint64_t samples = 0;   // 0 when the tree is exact
  std::uint64_t accepted = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

struct McReport {
  int n = 0;
  std::vector<double> lengths;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double reference = 0.0;
  double z_score = 0.0;
  bool enforce_delaunay = true;
  double htc_estimate = 0.0;
  double full_estimate = 0.0;
  std::vector<TreeEstimate> per_tree;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const McReport& report);

// Half-tight cylinder volume from the angle and simplex polytopes of every
// top-dimensional tree on labels 2..n. Reference: htc_volume(n).
// Requires lengths.size() == n, all positive, L1 < L2, samples >= 1.
McReport mc_htc_volume(int n, const std::vector<double>& lengths, const McOptions& options);

// V_{0,n} as the half-tight part plus the full-polytope part over full double
// trees, with the l fiber sampled or integrated. Reference: v0n_reduced(n).
McReport mc_full_volume(int n, const std::vector<double>& lengths, const McOptions& options);

// Gauss-Legendre nodes and weights on [a, b].
std::vector<std::pair<double, double>> gauss_legendre(int points, double a, double b);

}  // namespace wpvol::mc
