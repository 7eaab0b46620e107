#include <cmath>

#include "doctest.h"
#include "ghzlab/channels.hpp"
#include "ghzlab/optimize.hpp"
#include "ghzlab/quantumness.hpp"
#include "ghzlab/states.hpp"
#include "qs_oracle.hpp"
#include "test_util.hpp"

using namespace ghzlab;
using ghzlab::testing::local_rotation;
using ghzlab::testing::random_density;
using ghzlab::testing::simplex_oracle;

namespace {

ProductBasis random_basis(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.0, M_PI), ph(0.0, 2 * M_PI);
  ProductBasis b;
  for (int k = 0; k < n; ++k) b.angles.push_back({th(rng), ph(rng)});
  return b;
}

}  // namespace

TEST_SUITE("quantumness") {
  TEST_CASE("classical_dephase") {
    const std::vector<double> d{0.4, 0.3, 0.2, 0.1};
    const Matrix diag = Matrix::diagonal(d);
    CHECK(classical_dephase(diag, ProductBasis::computational(2)) == diag);

    const Matrix plus{{0.5, 0.5}, {0.5, 0.5}};
    CHECK(max_abs_diff(classical_dephase(plus, ProductBasis::computational(1)), Matrix::identity(2) * 0.5) == 0.0);

    const Matrix rho = random_density(4, 99);
    const Matrix once = classical_dephase(rho, ProductBasis::computational(2));
    CHECK(classical_dephase(once, ProductBasis::computational(2)) == once);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
      const auto b = random_basis(2, rng);
      const Matrix p1 = classical_dephase(rho, b);
      CHECK(max_abs_diff(classical_dephase(p1, b), p1) < 1e-14);
      CHECK(std::abs(p1.trace() - 1.0) < 1e-14);
    }
    CHECK_THROWS_AS(classical_dephase(rho, ProductBasis::computational(3)), std::invalid_argument);
  }

  TEST_CASE("fixed-basis identity against the simplex oracle") {
    std::mt19937_64 rng(2024);
    const Matrix rho = random_density(4, 1234);
    for (int t = 0; t < 10; ++t) {
      const auto b = random_basis(2, rng);
      CHECK(std::abs(simplex_oracle(rho, b) - entropy_gap(rho, b)) < 1e-6);
    }
  }

  TEST_CASE("qs on simple states") {
    SUBCASE("classical states") {
      const std::vector<double> d{0.4, 0.3, 0.2, 0.1};
      CHECK(qs(Matrix::diagonal(d)).value < 1e-6);
      // Diagonal in a rotated product basis.
      const Matrix rotated = apply_single_qubit(apply_single_qubit(Matrix::diagonal(d), local_rotation(1.1, 0.4), 0),
                                                local_rotation(2.0, 5.0), 1);
      const auto r = qs(rotated);
      CHECK(r.value >= 0.0);
      CHECK(r.value < 1e-6);
    }
    SUBCASE("Bell state: one bit, no product basis does better") {
      const Matrix bell = ghz(2);
      double grid_min = std::numeric_limits<double>::infinity();
      const int steps = 12;
      for (int a = 0; a <= steps; ++a)
        for (int b = 0; b <= steps; ++b)
          for (int c = 0; c < steps; ++c)
            for (int e = 0; e < steps; ++e) {
              ProductBasis pb{{{a * M_PI / steps, c * 2 * M_PI / steps}, {b * M_PI / steps, e * 2 * M_PI / steps}}};
              grid_min = std::min(grid_min, entropy_gap(bell, pb));
            }
      const auto r = qs(bell);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(r.value <= grid_min + 1e-9);
      CHECK(grid_min == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("argmin reproduces the value") {
      const Matrix rho = dephasing_channel(ghz_transversal(3), 0.3);
      const auto r = qs(rho);
      CHECK(std::abs(entropy_gap(rho, r.argmin_basis) - r.value) < 1e-10);
      CHECK(r.restarts_used >= 20);
    }
    SUBCASE("local-unitary invariance") {
      for (int seed = 0; seed < 3; ++seed) {
        const Matrix rho = random_density(4, 70 + seed);
        const Matrix u = apply_single_qubit(apply_single_qubit(rho, testing::random_unitary2(seed), 0),
                                            testing::random_unitary2(seed + 10), 1);
        CHECK(std::abs(qs(rho).value - qs(u).value) < 2e-3);
      }
    }
    CHECK_THROWS_AS(qs(Matrix::identity(32) * (1.0 / 32)), std::invalid_argument);
  }

  TEST_CASE("ordering chain") {
    const auto noiseless = qs_ordering_chain(4, 0.0);
    for (double v : noiseless) CHECK(v == doctest::Approx(1.0).epsilon(1e-6));
    const auto full = qs_ordering_chain(4, 1.0);
    for (double v : full) CHECK(v < 1e-6);
    const auto half = qs_ordering_chain(3, 0.5);
    CHECK(half[1] >= half[0] - 2e-3);
    CHECK(qs(dephasing_channel(ghz_transversal(3), 0.5)).value >= qs(dephasing_channel(ghz_transversal(2), 0.5)).value - 2e-3);
  }

  TEST_CASE("branch decomposition") {
    SUBCASE("n = 3, p = 0.4") {
      const auto r = branch_decomposition_check(3, 0.4);
      CHECK(std::abs(r.qs_composite - r.branch_average()) < 5e-3);
      CHECK(std::abs(r.qs_plus - r.qs_minus) < 5e-3);
    }
    SUBCASE("noiseless") {
      const auto r = branch_decomposition_check(3, 0.0);
      CHECK(std::abs(r.qs_composite - r.qs_plus) < 5e-3);
      CHECK(std::abs(r.qs_plus - 1.0) < 1e-6);
    }
    SUBCASE("fully dephased") {
      const auto r = branch_decomposition_check(3, 1.0);
      CHECK(r.qs_composite < 1e-6);
      CHECK(r.branch_average() < 1e-6);
    }
    SUBCASE("a Z measurement never increases Q_S") {
      for (int n : {2, 3})
        for (double p : {0.1, 0.5, 0.8}) {
          const auto r = branch_decomposition_check(n, p);
          CHECK(r.qs_composite <= r.qs_input + 2e-3);
        }
    }
  }
}
