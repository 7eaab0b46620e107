#include "ghzlab/states.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ghzlab {

namespace {
void require_size(int n) {
  if (n < 2) throw std::invalid_argument("state needs at least two qubits");
  if (n > 20) throw std::invalid_argument("state too large for a dense representation");
}
}  // namespace

StateVector ghz_vector(int n) {
  require_size(n);
  StateVector v(std::size_t{1} << n);
  v.front() = v.back() = 1.0 / std::sqrt(2.0);
  return v;
}

Matrix ghz(int n) { return outer(ghz_vector(n)); }

StateVector ghz_transversal_vector(int n, Sign sign) {
  require_size(n);
  // <b|+...+> = 2^{-n/2};  <b|-...-> = 2^{-n/2} (-1)^{popcount(b)}.
  const double amp = std::pow(2.0, -0.5 * n) / std::sqrt(2.0);
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  StateVector v(std::size_t{1} << n);
  for (std::size_t b = 0; b < v.size(); ++b) {
    const double parity = (std::popcount(b) % 2) ? -1.0 : 1.0;
    v[b] = amp * (1.0 + s * parity);
  }
  return v;
}

Matrix ghz_transversal(int n, Sign sign) { return outer(ghz_transversal_vector(n, sign)); }

StateVector graph_state_vector(const Graph& g) {
  const int n = g.size();
  require_size(n);
  const double amp = std::pow(2.0, -0.5 * n);
  StateVector v(std::size_t{1} << n);
  for (std::size_t b = 0; b < v.size(); ++b) {
    int phase = 0;
    for (auto [u, w] : g.edges()) {
      const bool bu = (b >> (n - 1 - u)) & 1, bw = (b >> (n - 1 - w)) & 1;
      phase ^= static_cast<int>(bu && bw);
    }
    v[b] = phase ? -amp : amp;
  }
  return v;
}

Matrix graph_state(const Graph& g) { return outer(graph_state_vector(g)); }

EncodedState transversal_graph_encoding(const Graph& g, const std::vector<ReductionStep>& steps) {
  if (!g.is_connected()) throw std::invalid_argument("transversal_graph_encoding: graph is disconnected");
  reduce_graph(g, steps);
  EncodedState out{{}, {}};
  for (const auto& s : steps)
    if (s.basis == Basis::X) out.encoding.hadamard_set.insert(s.vertex);
  StateVector psi = graph_state_vector(g);
  const Matrix h = pauli::H();
  for (int q : out.encoding.hadamard_set) psi = apply_single_qubit(psi, h, q);
  out.state = outer(psi);
  return out;
}

EncodedState transversal_graph_encoding(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("transversal_graph_encoding: graph is disconnected");
  const auto steps = g.size() >= 3 ? reduction_sequence(g) : std::vector<ReductionStep>{};
  return transversal_graph_encoding(g, steps);
}

Matrix add_white_noise(const Matrix& rho, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) throw std::invalid_argument("add_white_noise: visibility outside [0,1]");
  Matrix out = rho * visibility;
  const double w = (1.0 - visibility) / static_cast<double>(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) += w;
  return out;
}

std::array<MeasurementBranch, 2> measure_z(const Matrix& rho, int qubit) {
  const int n = qubit_count(rho);
  if (n < 2) throw std::invalid_argument("measure_z: need at least two qubits");
  if (qubit < 0 || qubit >= n) throw std::out_of_range("measure_z: qubit out of range");
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  std::vector<int> keep;
  for (int q = 0; q < n; ++q)
    if (q != qubit) keep.push_back(q);

  std::array<MeasurementBranch, 2> out{};
  for (int outcome = 0; outcome < 2; ++outcome) {
    Matrix projected(rho.dim());
    double prob = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
      if (static_cast<bool>(i & bit) != static_cast<bool>(outcome)) continue;
      prob += rho(i, i).real();
      for (std::size_t j = 0; j < rho.dim(); ++j)
        if (static_cast<bool>(j & bit) == static_cast<bool>(outcome)) projected(i, j) = rho(i, j);
    }
    out[outcome].outcome = outcome;
    out[outcome].probability = prob;
    if (prob < 1e-15) {
      out[outcome].post_state = Matrix::identity(rho.dim() / 2) * (2.0 / static_cast<double>(rho.dim()));
    } else {
      out[outcome].post_state = partial_trace(projected, keep) * (1.0 / prob);
    }
  }
  return out;
}

}  // namespace ghzlab
