#include "ghzlab/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzlab {

namespace {
bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }
}  // namespace

NoiseParams::NoiseParams(double p, double alpha_x, double alpha_y, double alpha_z)
    : p_(p), ax_(alpha_x), ay_(alpha_y), az_(alpha_z) {
  if (!in_unit(p)) throw std::invalid_argument("NoiseParams: p outside [0,1]");
  if (!in_unit(alpha_x) || !in_unit(alpha_y) || !in_unit(alpha_z))
    throw std::invalid_argument("NoiseParams: alpha outside [0,1]");
  if (std::abs(alpha_x + alpha_y + alpha_z - 1.0) > 1e-12)
    throw std::invalid_argument("NoiseParams: alphas do not sum to 1");
}

NoiseParams NoiseParams::from_deviation(double p, double epsilon) {
  if (!in_unit(epsilon)) throw std::invalid_argument("NoiseParams: epsilon outside [0,1]");
  return {p, 0.5 * epsilon, 0.5 * epsilon, 1.0 - epsilon};
}

Matrix pauli_channel(const Matrix& rho, int qubit, const NoiseParams& params) {
  const int n = qubit_count(rho);
  if (qubit < 0 || qubit >= n) throw std::out_of_range("pauli_channel: qubit out of range");
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  const double h = 0.5 * params.p();
  const double keep = 1.0 - h;
  const double wx = h * params.alpha_x(), wy = h * params.alpha_y(), wz = h * params.alpha_z();
  const std::size_t d = rho.dim();
  Matrix out(d);
  // X rho X flips the bit on both sides; Y rho Y does the same with sign -1 when the
  // row and column bits differ; Z rho Z keeps the entry with that same sign.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double sign = ((i ^ j) & bit) ? -1.0 : 1.0;
      const cplx flipped = rho(i ^ bit, j ^ bit);
      out(i, j) = (keep + sign * wz) * rho(i, j) + (wx + sign * wy) * flipped;
    }
  return out;
}

Matrix product_channel(const Matrix& rho, const NoiseParams& params) {
  Matrix out = rho;
  const int n = qubit_count(rho);
  for (int k = 0; k < n; ++k) out = pauli_channel(out, k, params);
  return out;
}

Matrix dephasing_channel(const Matrix& rho, int qubit, double p) {
  return pauli_channel(rho, qubit, NoiseParams::dephasing(p));
}

Matrix dephasing_channel(const Matrix& rho, double p) {
  return product_channel(rho, NoiseParams::dephasing(p));
}

}  // namespace ghzlab
