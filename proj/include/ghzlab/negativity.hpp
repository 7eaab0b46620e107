// Negativity of "one qubit versus the rest" cuts: brute force, closed forms for the
// transversal GHZ family, ordering chains and the encoding-basis scan.
//
// Convention: N(rho) = ||rho^{T_A}||_1 - 1, i.e. twice the magnitude of the negative
// part of the partial transpose, so a pure GHZ state has negativity 1.

#pragma once

#include <span>
#include <vector>

#include "ghzlab/channels.hpp"
#include "ghzlab/graph.hpp"
#include "ghzlab/tensor.hpp"

namespace ghzlab {

struct Bipartition {
  std::vector<int> side_a;

  static Bipartition one_vs_rest(int qubit) { return {{qubit}}; }
};

/// Largest system accepted by the brute-force route.
inline constexpr int kMaxBruteForceQubits = 12;

double negativity_bruteforce(const Matrix& rho, const Bipartition& cut);

struct FCoefficients {
  int mu;
  double f_plus;
  double f_minus;
};

/// f^{+/-}_mu = a^mu b^{n-mu} + a^{n-mu} b^mu with a = (p/2)(alpha_z +/- alpha_y) and
/// b = (1 - p/2) +/- (p/2) alpha_x.
FCoefficients f_coefficients(int n, const NoiseParams& params, int mu);

/// Closed-form one-vs-rest negativity of the transversal GHZ state under the product
/// Pauli channel. The block structure it relies on holds for alpha_y <= alpha_z (the
/// dephasing-dominated regime); other parameters throw std::domain_error.
double negativity_closed_form(int n, const NoiseParams& params);

/// Exact-dephasing case. Each binomial term is assembled in log space, so n up to ~1e4
/// keeps full relative precision.
double negativity_dephasing(int n, double p);

/// (1-p)^{n eps + 1 - eps}.
double weak_noise_approx(int n, double p, double epsilon);

/// (1 - p) - negativity_dephasing(n, p), evaluated from the binomial upper tail so it
/// stays accurate after the difference falls below double resolution.
double asymptotic_gap(int n, double p);
/// Natural log of asymptotic_gap; -infinity when the gap is exactly zero.
double log_asymptotic_gap(int n, double p);

/// Negativity of qubit 0 versus the rest for each state in the family (index order).
std::vector<double> ordering_chain(std::span<const Matrix> family);
bool is_non_decreasing(std::span<const double> values, double slack);

/// Lambda^PD(v |Phi+_T^n><Phi+_T^n| + (1-v) I/2^n) for n = n_min..n_max.
std::vector<Matrix> transversal_ghz_family(int n_min, int n_max, double p, double visibility = 1.0);
/// Unencoded counterpart, used as the contrast case (its chain decreases).
std::vector<Matrix> bare_ghz_family(int n_min, int n_max, double p, double visibility = 1.0);
/// Graphs visited by the greedy reduction of `top`, smallest first, each transversally
/// encoded, mixed with white noise at visibility v and dephased. Qubit 0 survives every
/// reduction step, so the qubit-0 cut is common to the whole family.
std::vector<Matrix> graph_family(const Graph& top, double p, double visibility = 1.0);

/// exp(-i phi Z/2) exp(-i theta Y/2).
Matrix encoding_rotation(double theta, double phi);

struct BasisScanResult {
  double theta = 0.0;
  double phi = 0.0;
  double best_negativity = 0.0;
  /// Value at the Hadamard point theta = pi/2, phi = 0.
  double hadamard_negativity = 0.0;
  bool converged = false;
};

/// Maximizes the one-vs-rest negativity of Lambda^PD(U^{(x)n} |Phi+^n>) over a shared
/// rotation U(theta, phi): 64x64 grid, then simplex refinement from the best five grid
/// points. n <= 5.
BasisScanResult basis_scan(int n, double p);
double rotated_ghz_negativity(int n, double p, double theta, double phi);

}  // namespace ghzlab
