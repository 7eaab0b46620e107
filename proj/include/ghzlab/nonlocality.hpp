// Mermin-Klyshko Bell operators, optimized quantum values and the success probability of
// the associated communication-complexity problem.
//
// Normalization: B_1 = A_1 and
//   B_k = 1/2 B_{k-1} (x) (A_k + A'_k) + 1/2 B'_{k-1} (x) (A_k - A'_k),
// with B' obtained by swapping primed and unprimed settings everywhere. The local bound is 1.

#pragma once

#include <array>
#include <vector>

#include "ghzlab/tensor.hpp"

namespace ghzlab {

using BlochVector = std::array<double, 3>;

struct PartySettings {
  std::vector<BlochVector> a;        // unprimed direction per party
  std::vector<BlochVector> a_prime;  // primed direction per party

  int parties() const { return static_cast<int>(a.size()); }
  /// Throws unless both lists have the same length and every vector has unit norm within 1e-12.
  void validate() const;
  /// Directions from polar/azimuthal angles: x = {theta_a0, phi_a0, theta_a'0, phi_a'0, ...}.
  static PartySettings from_angles(std::span<const double> x);
  /// Equatorial directions (cos, sin, 0): x = {xi_a0, xi_a'0, xi_a1, ...}.
  static PartySettings equatorial(std::span<const double> xi);
};

/// sigma . v
Matrix bloch_observable(const BlochVector& v);

Matrix mk_operator(const PartySettings& s);
/// Primed partner B'_n.
Matrix mk_operator_primed(const PartySettings& s);

/// Coefficients of B_n in the correlator basis: entry s (party 0 = most significant bit,
/// bit 1 = primed setting) multiplies (x)_k A_k^{(s_k)}.
std::vector<double> mk_coefficients(int n);

/// Sum of |coefficients|: the maximum over no-signalling boxes, n <= 12.
double mk_algebraic_max(int n);

/// Tr(rho B_n) at fixed settings.
double mk_expectation(const Matrix& rho, const PartySettings& s);

struct MkResult {
  double beta_q = 0.0;
  PartySettings settings;
  bool converged = false;
};

/// Maximizes Tr(rho B_n) over settings: 16x16 grid of party-symmetric settings in each of
/// the XY, XZ and YZ planes, simplex refinement over full-sphere angles from the best grid
/// points, then alternating per-party updates (Tr(rho B_n) is linear in each party's pair of
/// directions) until the value stops improving. The result is capped at the algebraic
/// maximum to absorb rounding. Deterministic. n <= 8.
MkResult mk_quantum_value(const Matrix& rho);

struct BellValue {
  double beta_q;
  double beta_nl;
  double classical_bound = 1.0;
};

/// (1 + beta_q / beta_nl) / 2. Requires 0 <= beta_q <= beta_nl.
double success_probability(double beta_q, double beta_nl);
/// Best probability reachable with local correlations, (1 + 1/beta_nl)/2.
double classical_success_ceiling(int n);

}  // namespace ghzlab
