#include "ghzlab/metrology.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ghzlab/channels.hpp"

namespace ghzlab {

std::string_view to_string(FisherMethod m) {
  switch (m) {
    case FisherMethod::Spectral: return "spectral";
    case FisherMethod::ClosedFormBare: return "closed_form_bare";
    case FisherMethod::ClosedFormTransversal: return "closed_form_transversal";
  }
  return "unknown";
}

namespace {

double generator_eigenvalue(int n, std::size_t b) { return static_cast<double>(n - 2 * std::popcount(b)); }

void require_inputs(int n, double p) {
  if (n < 1) throw std::invalid_argument("qfi: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("qfi: p outside [0,1]");
}

}  // namespace

Matrix phase_evolve(const Matrix& rho, double phi) {
  const int n = qubit_count(rho);
  const std::size_t d = rho.dim();
  std::vector<cplx> phase(d);
  for (std::size_t b = 0; b < d; ++b) phase[b] = std::polar(1.0, -phi * generator_eigenvalue(n, b));
  Matrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = phase[i] * rho(i, j) * std::conj(phase[j]);
  return out;
}

FisherValue qfi_spectral(const Matrix& rho) {
  const int n = qubit_count(rho);
  const Spectrum s = hermitian_eig(rho);
  const std::size_t d = rho.dim();
  // G w_k, with G = sum Z diagonal.
  Matrix gv(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double g = generator_eigenvalue(n, i);
    for (std::size_t k = 0; k < d; ++k) gv(i, k) = g * s.vectors(i, k);
  }
  double f = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double pj = std::max(0.0, s.values[j]);
    for (std::size_t k = j + 1; k < d; ++k) {
      const double pk = std::max(0.0, s.values[k]);
      if (pj + pk <= 1e-12) continue;
      cplx elem = 0.0;
      for (std::size_t i = 0; i < d; ++i) elem += std::conj(s.vectors(i, j)) * gv(i, k);
      f += 4.0 * (pj - pk) * (pj - pk) / (pj + pk) * std::norm(elem);
    }
  }
  return {f, FisherMethod::Spectral};
}

FisherValue qfi_bare_closed(int n, double p) {
  require_inputs(n, p);
  return {4.0 * n * n * std::pow(1.0 - p, 2.0 * n), FisherMethod::ClosedFormBare};
}

FisherValue qfi_transversal_closed(int n, double p) {
  require_inputs(n, p);
  const double q = 0.5 * p;
  return {4.0 * n * n * (1.0 - p) * (1.0 - p) + 16.0 * n * (1.0 - q) * q, FisherMethod::ClosedFormTransversal};
}

Matrix transversal_sandwich(const Matrix& rho, double p) {
  const Matrix h = pauli::H();
  return apply_on_all(dephasing_channel(apply_on_all(rho, h), p), h);
}

double cramer_rao(const FisherValue& f, int nu) {
  if (nu < 1) throw std::invalid_argument("cramer_rao: nu must be positive");
  if (f.value < 0.0) throw std::invalid_argument("cramer_rao: negative Fisher information");
  if (f.value == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (2.0 * std::sqrt(nu * f.value));
}

}  // namespace ghzlab
