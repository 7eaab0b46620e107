#include <cmath>

#include "doctest.h"
#include "ghzlab/channels.hpp"
#include "ghzlab/nonlocality.hpp"
#include "ghzlab/states.hpp"
#include "test_util.hpp"

using namespace ghzlab;

namespace {

double spectral_radius(const Matrix& m) {
  const auto ev = hermitian_eigenvalues(m);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

// With A = X and A' = Y on every party the correlator monomials are orthogonal Pauli
// strings, so each coefficient is a normalized Hilbert-Schmidt overlap.
std::vector<double> coefficients_by_overlap(int n) {
  PartySettings s;
  for (int k = 0; k < n; ++k) {
    s.a.push_back({1, 0, 0});
    s.a_prime.push_back({0, 1, 0});
  }
  const Matrix b = mk_operator(s);
  std::vector<double> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Matrix string = (mask >> (n - 1)) & 1 ? pauli::Y() : pauli::X();
    for (int k = 1; k < n; ++k) string = kron(string, (mask >> (n - 1 - k)) & 1 ? pauli::Y() : pauli::X());
    out.push_back((b * string).trace().real() / static_cast<double>(b.dim()));
  }
  return out;
}

PartySettings chsh() {
  const double r = M_SQRT1_2;
  return {{{0, 0, 1}, {r, 0, r}}, {{1, 0, 0}, {-r, 0, r}}};
}

}  // namespace

TEST_SUITE("nonlocality") {
  TEST_CASE("settings") {
    CHECK_NOTHROW(chsh().validate());
    PartySettings bad{{{1, 0, 0}}, {{0.5, 0, 0}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PartySettings uneven{{{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}}};
    CHECK_THROWS_AS(uneven.validate(), std::invalid_argument);

    const std::vector<double> xi{0.0, M_PI / 2};
    const auto eq = PartySettings::equatorial(xi);
    CHECK(eq.a[0][0] == doctest::Approx(1.0));
    CHECK(eq.a_prime[0][1] == doctest::Approx(1.0));
    const std::vector<double> angles{M_PI / 2, 0.0, 0.0, 0.0};
    const auto fa = PartySettings::from_angles(angles);
    CHECK(fa.a[0][0] == doctest::Approx(1.0));
    CHECK(fa.a_prime[0][2] == doctest::Approx(1.0));
    CHECK(max_abs_diff(bloch_observable({0, 1, 0}), pauli::Y()) == 0.0);
  }

  TEST_CASE("mk_operator") {
    const Matrix b2 = mk_operator(chsh());
    CHECK(hermiticity_error(b2) < 1e-15);
    CHECK(spectral_radius(b2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    PartySettings one{{{0, 0, 1}}, {{1, 0, 0}}};
    CHECK(mk_operator(one) == pauli::Z());
    CHECK(spectral_radius(mk_operator(one)) == doctest::Approx(1.0));

    SUBCASE("swapping primed and unprimed gives the partner operator") {
      const std::vector<double> x{0.3, 1.0, 2.0, 0.4, 1.1, 2.2, 0.7, 5.0, 2.5, 0.1, 1.9, 3.3};
      const auto s = PartySettings::from_angles(x);
      PartySettings swapped{s.a_prime, s.a};
      CHECK(max_abs_diff(mk_operator(swapped), mk_operator_primed(s)) < 1e-15);
    }
  }

  TEST_CASE("algebraic maximum") {
    CHECK(mk_algebraic_max(1) == 1.0);
    CHECK(mk_algebraic_max(2) == 2.0);
    CHECK(mk_algebraic_max(3) == 2.0);
    const auto c2 = mk_coefficients(2);
    for (double c : c2) CHECK(std::abs(c) == 0.5);
    const auto c3 = mk_coefficients(3);
    int nonzero = 0;
    for (double c : c3)
      if (c != 0.0) {
        ++nonzero;
        CHECK(std::abs(c) == 0.5);
      }
    CHECK(nonzero == 4);
    for (int n = 1; n <= 6; ++n) {
      const auto direct = mk_coefficients(n), oracle = coefficients_by_overlap(n);
      for (std::size_t i = 0; i < direct.size(); ++i) CHECK(std::abs(direct[i] - oracle[i]) < 1e-14);
    }
    CHECK_THROWS_AS(mk_algebraic_max(13), std::invalid_argument);
  }

  TEST_CASE("optimized quantum values") {
    for (int n = 2; n <= 5; ++n) {
      const auto r = mk_quantum_value(ghz(n));
      CHECK(std::abs(r.beta_q - std::pow(2.0, (n - 1) / 2.0)) < 1e-6);
      CHECK(r.converged);
      CHECK(std::abs(mk_expectation(ghz(n), r.settings) - r.beta_q) < 1e-12);
    }
    CHECK(mk_quantum_value(dephasing_channel(ghz_transversal(3), 1.0)).beta_q <= 1.0 + 1e-9);

    SUBCASE("Tsirelson-type cap on random states") {
      for (int seed = 0; seed < 3; ++seed) CHECK(mk_quantum_value(testing::random_density(8, 90 + seed)).beta_q <= 2.0 + 1e-9);
    }
    SUBCASE("transversal dominance and monotone decay, n = 3") {
      double prev_t = 1e9, prev_b = 1e9;
      for (double p : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        const double t = mk_quantum_value(dephasing_channel(ghz_transversal(3), p)).beta_q;
        const double b = mk_quantum_value(dephasing_channel(ghz(3), p)).beta_q;
        CHECK(t >= b - 1e-9);
        CHECK(t <= prev_t + 1e-9);
        CHECK(b <= prev_b + 1e-9);
        prev_t = t;
        prev_b = b;
      }
    }
  }

  TEST_CASE("success probability") {
    CHECK(success_probability(std::sqrt(2.0), 2.0) == doctest::Approx(0.5 * (1 + M_SQRT1_2)));
    CHECK(success_probability(1.0, 2.0) == 0.75);
    CHECK(success_probability(2.0, 2.0) == 1.0);
    CHECK(classical_success_ceiling(3) == 0.75);
    CHECK_THROWS_AS(success_probability(2.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(success_probability(-0.1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(success_probability(0.5, 0.5), std::invalid_argument);
  }
}
