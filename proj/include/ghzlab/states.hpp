// GHZ, transversal GHZ and graph states, white-noise admixture and Z-measurement branches.

#pragma once

#include <array>
#include <set>
#include <vector>

#include "ghzlab/graph.hpp"
#include "ghzlab/tensor.hpp"

namespace ghzlab {

/// (|0...0> + |1...1>)/sqrt(2), n >= 2.
StateVector ghz_vector(int n);
Matrix ghz(int n);

enum class Sign { Plus, Minus };

/// (|+...+> +/- |-...->)/sqrt(2). The plus variant equals H^{(x)n} applied to ghz(n).
StateVector ghz_transversal_vector(int n, Sign sign = Sign::Plus);
Matrix ghz_transversal(int n, Sign sign = Sign::Plus);

/// Controlled-Z on every edge applied to |+>^{(x)n}.
StateVector graph_state_vector(const Graph& g);
Matrix graph_state(const Graph& g);

/// Qubits that receive a Hadamard rotation before the noise acts.
struct TransversalEncoding {
  std::set<int> hadamard_set;
};

struct EncodedState {
  TransversalEncoding encoding;
  Matrix state;
};

/// Hadamard on every vertex the greedy reduction measures in X. A two-vertex graph gets
/// the empty set. Throws std::invalid_argument for disconnected graphs.
EncodedState transversal_graph_encoding(const Graph& g);
/// Same, for an explicit reduction sequence (validated with reduce_graph).
EncodedState transversal_graph_encoding(const Graph& g, const std::vector<ReductionStep>& steps);

/// v rho + (1 - v) I / 2^N.
Matrix add_white_noise(const Matrix& rho, double visibility);

struct MeasurementBranch {
  int outcome;
  double probability;
  Matrix post_state;  // measured qubit traced out
};

/// Projective Z measurement of one qubit. A branch with probability below 1e-15 carries the
/// maximally mixed state as its (irrelevant) post-measurement state.
std::array<MeasurementBranch, 2> measure_z(const Matrix& rho, int qubit);

}  // namespace ghzlab
