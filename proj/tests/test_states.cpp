#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ghzlab/channels.hpp"
#include "ghzlab/graph.hpp"
#include "ghzlab/negativity.hpp"
#include "ghzlab/states.hpp"
#include "test_util.hpp"

using namespace ghzlab;

namespace {

// Stabilizer K_a = X_a prod_{b in N(a)} Z_b as a full operator.
Matrix stabilizer(const Graph& g, int a) {
  const int n = g.size();
  Matrix out = Matrix::identity(std::size_t{1} << n);
  out = testing::embed(pauli::X(), a, n) * out;
  for (int b : g.neighbors(a)) out = testing::embed(pauli::Z(), b, n) * out;
  return out;
}

double expectation(const Matrix& rho, const Matrix& op) { return (rho * op).trace().real(); }

double max_spectrum_diff(const Matrix& a, const Matrix& b) {
  const auto ea = hermitian_eigenvalues(a), eb = hermitian_eigenvalues(b);
  double d = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
  return d;
}

// Spectra of every marginal are local-unitary invariants.
double max_marginal_spectrum_diff(const Matrix& a, const Matrix& b) {
  const int n = qubit_count(a);
  double d = max_spectrum_diff(a, b);
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
      if (mask & (1u << q)) keep.push_back(q);
    d = std::max(d, max_spectrum_diff(partial_trace(a, keep), partial_trace(b, keep)));
  }
  return d;
}

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("ghz") {
    const auto v = ghz_vector(2);
    CHECK(v[0].real() == doctest::Approx(M_SQRT1_2));
    CHECK(v[3].real() == doctest::Approx(M_SQRT1_2));
    CHECK(std::abs(v[1]) == 0.0);
    CHECK(std::abs(v[2]) == 0.0);

    const Matrix g3 = ghz(3);
    CHECK(g3(0, 0).real() == doctest::Approx(0.5));
    CHECK(g3(7, 7).real() == doctest::Approx(0.5));
    CHECK(g3(0, 7).real() == doctest::Approx(0.5));
    CHECK(g3(7, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(g3.trace() - 1.0) < 1e-15);

    const Matrix g5 = ghz(5);
    CHECK((g5 * g5).trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ghz(1), std::invalid_argument);
  }

  TEST_CASE("ghz_transversal") {
    // n = 2: (|++> + |-->)/sqrt2 = (|00> + |11>)/sqrt2
    const auto v = ghz_transversal_vector(2);
    CHECK(std::abs(v[0] - M_SQRT1_2) < 1e-15);
    CHECK(std::abs(v[3] - M_SQRT1_2) < 1e-15);
    CHECK(std::abs(v[1]) < 1e-15);
    CHECK(std::abs(v[2]) < 1e-15);

    for (int n = 2; n <= 6; ++n) {
      CHECK(max_abs_diff(ghz_transversal(n), apply_on_all(ghz(n), pauli::H())) < 1e-14);
      const auto plus = ghz_transversal_vector(n, Sign::Plus), minus = ghz_transversal_vector(n, Sign::Minus);
      cplx overlap = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < plus.size(); ++i) {
        overlap += std::conj(plus[i]) * minus[i];
        norm += std::conj(minus[i]) * minus[i];
      }
      CHECK(std::abs(overlap) < 1e-14);
      CHECK(norm.real() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(max_abs_diff(apply_on_all(ghz_transversal(3), pauli::H()), ghz(3)) < 1e-15);
  }

  TEST_CASE("graph_state") {
    const Graph edge(2, {{0, 1}});
    const Matrix e = graph_state(edge);
    CHECK(negativity_bruteforce(e, Bipartition::one_vs_rest(0)) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<int> first{0};
    CHECK(von_neumann_entropy(partial_trace(e, first)) == doctest::Approx(1.0).epsilon(1e-12));

    const Graph empty(3, {});
    const auto v = graph_state_vector(empty);
    for (const auto& a : v) CHECK(std::abs(a - 1.0 / std::sqrt(8.0)) < 1e-15);

    SUBCASE("stabilizers") {
      const Graph graphs[] = {Graph::path(3), Graph::path(5), Graph::star(4), Graph::cycle(5), Graph::complete(4),
                              Graph(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}})};
      for (const auto& g : graphs) {
        const Matrix rho = graph_state(g);
        for (int a = 0; a < g.size(); ++a) CHECK(expectation(rho, stabilizer(g, a)) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("transversal_graph_encoding") {
    SUBCASE("two vertices: nothing to reduce") {
      const auto enc = transversal_graph_encoding(Graph(2, {{0, 1}}));
      CHECK(enc.encoding.hadamard_set.empty());
      CHECK(max_abs_diff(enc.state, graph_state(Graph(2, {{0, 1}}))) == 0.0);
    }
    SUBCASE("P4 measured in X at the interior") {
      const Graph p4 = Graph::path(4);
      const std::vector<ReductionStep> steps{{1, Basis::X}, {2, Basis::X}};
      const auto enc = transversal_graph_encoding(p4, steps);
      CHECK(enc.encoding.hadamard_set == std::set<int>{1, 2});
      Matrix expected = graph_state(p4);
      expected = apply_single_qubit(apply_single_qubit(expected, pauli::H(), 1), pauli::H(), 2);
      CHECK(max_abs_diff(enc.state, expected) < 1e-15);
    }
    SUBCASE("greedy star keeps leaves in Z") {
      const auto enc = transversal_graph_encoding(Graph::star(4));
      CHECK(enc.encoding.hadamard_set.empty());
    }
    SUBCASE("star graph is a GHZ state up to local unitaries") {
      // H on the leaves of the star state gives ghz(n); the marginal spectra agree.
      for (int n = 3; n <= 5; ++n) {
        Matrix s = graph_state(Graph::star(n));
        for (int k = 1; k < n; ++k) s = apply_single_qubit(s, pauli::H(), k);
        CHECK(max_abs_diff(s, ghz(n)) < 1e-14);
      }
    }
    SUBCASE("disconnected graph rejected") {
      CHECK_THROWS_AS(transversal_graph_encoding(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    }
  }

  TEST_CASE("add_white_noise") {
    const Matrix rho = ghz(2);
    CHECK(add_white_noise(rho, 1.0) == rho);
    CHECK(max_abs_diff(add_white_noise(rho, 0.0), Matrix::identity(4) * 0.25) == 0.0);
    const auto ev = hermitian_eigenvalues(add_white_noise(rho, 0.8));
    CHECK(ev[0] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(ev[3] == doctest::Approx(0.85).epsilon(1e-14));
    CHECK_THROWS_AS(add_white_noise(rho, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(add_white_noise(rho, -0.1), std::invalid_argument);
  }

  TEST_CASE("measure_z") {
    SUBCASE("transversal GHZ branches") {
      const auto br = measure_z(ghz_transversal(3), 0);
      CHECK(br[0].probability == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(br[1].probability == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(max_abs_diff(br[0].post_state, ghz_transversal(2, Sign::Plus)) < 1e-14);
      CHECK(max_abs_diff(br[1].post_state, ghz_transversal(2, Sign::Minus)) < 1e-14);
    }
    SUBCASE("eigenstate") {
      Matrix zero(2);
      zero(0, 0) = 1.0;
      const Matrix rho = testing::random_density(4, 3);
      const auto br = measure_z(kron(zero, rho), 0);
      CHECK(br[0].probability == doctest::Approx(1.0));
      CHECK(br[1].probability == 0.0);
      CHECK(max_abs_diff(br[0].post_state, rho) < 1e-15);
      CHECK(is_density_matrix(br[1].post_state));
    }
    SUBCASE("commutes with dephasing") {
      for (int n = 3; n <= 5; ++n)
        for (double p : {0.2, 0.5, 0.9})
          for (int k : {0, n - 1}) {
            const auto a = measure_z(dephasing_channel(ghz_transversal(n), p), k);
            const auto b = measure_z(ghz_transversal(n), k);
            for (int o = 0; o < 2; ++o) {
              CHECK(std::abs(a[o].probability - b[o].probability) < 1e-12);
              CHECK(max_abs_diff(a[o].post_state, dephasing_channel(b[o].post_state, p)) < 1e-12);
            }
          }
    }
    SUBCASE("branches of the dephased transversal GHZ share a spectrum") {
      for (int n = 3; n <= 6; ++n)
        for (double p : {0.1, 0.4, 0.8}) {
          const auto br = measure_z(dephasing_channel(ghz_transversal(n), p), 1);
          CHECK(max_spectrum_diff(br[0].post_state, br[1].post_state) < 1e-10);
        }
    }
    SUBCASE("probabilities sum to one") {
      for (int seed = 0; seed < 5; ++seed) {
        const auto br = measure_z(testing::random_density(8, 60 + seed), seed % 3);
        CHECK(br[0].probability + br[1].probability == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(is_density_matrix(br[0].post_state));
        CHECK(is_density_matrix(br[1].post_state));
      }
    }
    CHECK_THROWS_AS(measure_z(Matrix::identity(2) * 0.5, 0), std::invalid_argument);
  }

  TEST_CASE("reduction simulated on states matches the reduced graph state") {
    // Measure each step's vertex (X via a Hadamard first), keep both branches, and compare
    // with the graph state of the rewritten graph under the same white noise. Local
    // corrections are unitary, so every marginal spectrum must coincide.
    const Graph graphs[] = {Graph::path(4), Graph::path(5), Graph::star(5), Graph::cycle(5), Graph::complete(4),
                            Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})};
    for (const auto& g : graphs) {
      std::vector<std::vector<ReductionStep>> sequences{reduction_sequence(g)};
      if (g == Graph::path(4)) sequences.push_back({{1, Basis::X}, {2, Basis::X}});
      for (const auto& steps : sequences) {
        const auto reduced = reduce_graph(g, steps);
        for (double v : {1.0, 0.8}) {
          std::vector<Matrix> branch_states{graph_state(g)};
          std::vector<int> alive(g.size());
          std::iota(alive.begin(), alive.end(), 0);
          for (std::size_t s = 0; s < steps.size(); ++s) {
            const int pos = static_cast<int>(std::find(alive.begin(), alive.end(), steps[s].vertex) - alive.begin());
            std::vector<Matrix> next;
            for (const auto& rho : branch_states) {
              const Matrix rotated = steps[s].basis == Basis::X ? apply_single_qubit(rho, pauli::H(), pos) : rho;
              for (const auto& b : measure_z(rotated, pos))
                if (b.probability > 1e-12) next.push_back(b.post_state);
            }
            alive.erase(alive.begin() + pos);
            branch_states = std::move(next);
            const Matrix target = add_white_noise(graph_state(reduced[s + 1]), v);
            for (const auto& rho : branch_states)
              CHECK(max_marginal_spectrum_diff(add_white_noise(rho, v), target) < 1e-8);
          }
        }
      }
    }
  }
}
