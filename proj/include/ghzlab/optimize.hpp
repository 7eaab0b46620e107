// Derivative-free minimization (Nelder-Mead simplex) and deterministic start points.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ghzlab {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  double initial_step = 0.1;
  /// Converged when every vertex lies within this distance of the best vertex.
  double diameter_tol = 1e-8;
  int max_evaluations = 20000;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts = {});

/// Radical inverse of `index` in the given prime base, in [0, 1).
double halton(unsigned index, unsigned base);
/// Point `index` of the Halton sequence in `dim` dimensions (first dim primes as bases).
std::vector<double> halton_point(unsigned index, std::size_t dim);

}  // namespace ghzlab
