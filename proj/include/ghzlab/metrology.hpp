// Phase estimation with H = lambda * sum_k Z_k: quantum Fisher information of
// rho_phi = U_phi rho U_phi^dag, U_phi = exp(-i phi sum_k Z_k), and its closed forms under
// local dephasing.

#pragma once

#include <string_view>

#include "ghzlab/tensor.hpp"

namespace ghzlab {

enum class FisherMethod { Spectral, ClosedFormBare, ClosedFormTransversal };
std::string_view to_string(FisherMethod m);

struct FisherValue {
  double value;
  FisherMethod method;
};

/// Diagonal phase exp(-i phi (n - 2 popcount(b))) on basis state b.
Matrix phase_evolve(const Matrix& rho, double phi);

/// 4 sum_{j<k} (p_j - p_k)^2 / (p_j + p_k) |<w_j| sum Z |w_k>|^2 over the spectrum of rho,
/// skipping pairs with p_j + p_k <= 1e-12. Independent of phi by unitary covariance.
FisherValue qfi_spectral(const Matrix& rho);

/// 4 n^2 (1-p)^{2n}: dephased bare GHZ.
FisherValue qfi_bare_closed(int n, double p);
/// 4 n^2 (1-p)^2 + 16 n (1 - p/2)(p/2): GHZ encoded with Hadamards, dephased, decoded.
FisherValue qfi_transversal_closed(int n, double p);

/// H^{(x)n} Lambda^PD(H^{(x)n} rho H^{(x)n}) H^{(x)n}.
Matrix transversal_sandwich(const Matrix& rho, double p);

/// 1 / (2 sqrt(nu F)); +infinity when F is zero.
double cramer_rao(const FisherValue& f, int nu);

inline double separable_limit(int n) { return 4.0 * n; }
inline double heisenberg_limit(int n) { return 4.0 * n * n; }

}  // namespace ghzlab
