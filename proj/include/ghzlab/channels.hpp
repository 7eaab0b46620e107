// Local Pauli noise: E(rho) = (1 - p/2) rho + (p/2)(aX X rho X + aY Y rho Y + aZ Z rho Z).

#pragma once

#include "ghzlab/tensor.hpp"

namespace ghzlab {

class NoiseParams {
public:
  /// Throws std::invalid_argument unless p and each alpha lie in [0,1] and the alphas sum to 1
  /// within 1e-12. Inputs are never renormalized.
  NoiseParams(double p, double alpha_x, double alpha_y, double alpha_z);

  static NoiseParams dephasing(double p) { return {p, 0.0, 0.0, 1.0}; }
  /// alpha_x = alpha_y = epsilon / 2, alpha_z = 1 - epsilon.
  static NoiseParams from_deviation(double p, double epsilon);

  double p() const { return p_; }
  double alpha_x() const { return ax_; }
  double alpha_y() const { return ay_; }
  double alpha_z() const { return az_; }
  /// Deviation from exact dephasing, alpha_x + alpha_y.
  double epsilon() const { return ax_ + ay_; }

private:
  double p_, ax_, ay_, az_;
};

Matrix pauli_channel(const Matrix& rho, int qubit, const NoiseParams& params);
/// Same channel on every qubit, applied in ascending qubit order.
Matrix product_channel(const Matrix& rho, const NoiseParams& params);

Matrix dephasing_channel(const Matrix& rho, int qubit, double p);
Matrix dephasing_channel(const Matrix& rho, double p);

}  // namespace ghzlab
