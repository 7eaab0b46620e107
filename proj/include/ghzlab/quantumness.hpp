// Relative entropy of quantumness: the relative-entropy distance from a state to the
// closest classically correlated state, sum_i p_i |i_1...i_N><i_1...i_N| over product bases.

#pragma once

#include <utility>
#include <vector>

#include "ghzlab/tensor.hpp"

namespace ghzlab {

/// Local basis k is {U(theta_k, phi_k)|0>, U(theta_k, phi_k)|1>} with
/// U = exp(-i phi Z/2) exp(-i theta Y/2).
struct ProductBasis {
  std::vector<std::pair<double, double>> angles;

  static ProductBasis computational(int n) { return {std::vector<std::pair<double, double>>(n, {0.0, 0.0})}; }
  static ProductBasis from_flat(std::span<const double> x);
};

/// Pi(rho): keep only the diagonal of rho in the product basis.
Matrix classical_dephase(const Matrix& rho, const ProductBasis& basis);

/// Probabilities <i|W^dag rho W|i> for W the product-basis rotation.
std::vector<double> basis_populations(const Matrix& rho, const ProductBasis& basis);

/// S(Pi(rho)) - S(rho), which equals min over classical xi diagonal in `basis` of S(rho || xi).
double entropy_gap(const Matrix& rho, const ProductBasis& basis);

struct QsOptions {
  int starts_per_round = 20;
  int max_rounds = 5;
  double round_improvement_tol = 1e-9;
  unsigned workers = 1;
};

struct QsResult {
  double value = 0.0;
  ProductBasis argmin_basis;
  int restarts_used = 0;
  bool converged = false;
};

/// Minimum of entropy_gap over product bases (multi-start simplex search). N <= 4.
QsResult qs(const Matrix& rho, const QsOptions& opts = {});

/// Q_S of Lambda^PD(|Phi+_T^n>) for n = 2..n_max (n_max <= 4).
std::vector<double> qs_ordering_chain(int n_max, double p, const QsOptions& opts = {});

struct BranchReport {
  double qs_input = 0.0;      // Q_S(Lambda^PD(|Phi+_T^n>))
  double qs_composite = 0.0;  // after a non-selective Z measurement of qubit 0
  double qs_plus = 0.0;       // outcome-0 branch, measured qubit traced out
  double qs_minus = 0.0;
  double branch_average() const { return 0.5 * (qs_plus + qs_minus); }
};

/// Evaluates the quantities behind the single-step chain argument for n <= 4.
BranchReport branch_decomposition_check(int n, double p, const QsOptions& opts = {});

}  // namespace ghzlab
