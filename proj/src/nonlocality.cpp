#include "ghzlab/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ghzlab/optimize.hpp"

namespace ghzlab {

void PartySettings::validate() const {
  if (a.size() != a_prime.size() || a.empty()) throw std::invalid_argument("PartySettings: mismatched party lists");
  auto unit = [](const BlochVector& v) { return std::abs(std::hypot(v[0], v[1], v[2]) - 1.0) <= 1e-12; };
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!unit(a[k]) || !unit(a_prime[k])) throw std::invalid_argument("PartySettings: direction is not a unit vector");
}

namespace {

BlochVector direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double dot(const BlochVector& u, const BlochVector& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

BlochVector normalized(const BlochVector& v) {
  const double r = std::hypot(v[0], v[1], v[2]);
  if (r == 0.0) return {1.0, 0.0, 0.0};
  return {v[0] / r, v[1] / r, v[2] / r};
}

// B_n and B'_n for arbitrary (not necessarily unit) vectors; linear in each party's pair.
std::pair<Matrix, Matrix> build_mk(const std::vector<BlochVector>& a, const std::vector<BlochVector>& ap) {
  Matrix b = bloch_observable(a[0]);
  Matrix bp = bloch_observable(ap[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    const Matrix x = bloch_observable(a[k]), xp = bloch_observable(ap[k]);
    const Matrix sum = x + xp, diff = x - xp;
    Matrix nb = (kron(b, sum) + kron(bp, diff)) * 0.5;
    Matrix nbp = (kron(bp, sum) - kron(b, diff)) * 0.5;
    b = std::move(nb);
    bp = std::move(nbp);
  }
  return {std::move(b), std::move(bp)};
}

// Re Tr(rho B) without forming the product.
double trace_product(const Matrix& rho, const Matrix& b) {
  double t = 0.0;
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t += (rho(i, j) * b(j, i)).real();
  return t;
}

double raw_expectation(const Matrix& rho, const std::vector<BlochVector>& a, const std::vector<BlochVector>& ap) {
  return trace_product(rho, build_mk(a, ap).first);
}

// Alternating maximization: with all other parties fixed the value is g.a_k + g'.a'_k, so
// the best unit directions are g/|g| and g'/|g'|.
// Returns the final value and whether the sweeps stalled before the cap.
std::pair<double, bool> seesaw(const Matrix& rho, PartySettings& s, int max_sweeps = 500) {
  const int n = s.parties();
  double value = raw_expectation(rho, s.a, s.a_prime);
  bool stalled = false;
  static const BlochVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = value;
    for (int k = 0; k < n; ++k) {
      BlochVector g{}, gp{};
      auto a = s.a, ap = s.a_prime;
      for (int mu = 0; mu < 3; ++mu) {
        a[k] = basis[mu];
        ap[k] = {0, 0, 0};
        g[mu] = raw_expectation(rho, a, ap);
        a[k] = {0, 0, 0};
        ap[k] = basis[mu];
        gp[mu] = raw_expectation(rho, a, ap);
      }
      const BlochVector na = normalized(g), nap = normalized(gp);
      const double candidate = dot(g, na) + dot(gp, nap);
      if (candidate > value) {
        s.a[k] = na;
        s.a_prime[k] = nap;
        value = candidate;
      }
    }
    if (value - before < 1e-13) {
      stalled = true;
      break;
    }
  }
  return {raw_expectation(rho, s.a, s.a_prime), stalled};
}

}  // namespace

PartySettings PartySettings::from_angles(std::span<const double> x) {
  if (x.size() % 4) throw std::invalid_argument("PartySettings::from_angles: need four angles per party");
  PartySettings s;
  for (std::size_t k = 0; k < x.size(); k += 4) {
    s.a.push_back(direction(x[k], x[k + 1]));
    s.a_prime.push_back(direction(x[k + 2], x[k + 3]));
  }
  return s;
}

PartySettings PartySettings::equatorial(std::span<const double> xi) {
  if (xi.size() % 2) throw std::invalid_argument("PartySettings::equatorial: need two angles per party");
  PartySettings s;
  for (std::size_t k = 0; k < xi.size(); k += 2) {
    s.a.push_back({std::cos(xi[k]), std::sin(xi[k]), 0.0});
    s.a_prime.push_back({std::cos(xi[k + 1]), std::sin(xi[k + 1]), 0.0});
  }
  return s;
}

Matrix bloch_observable(const BlochVector& v) {
  return {{v[2], cplx(v[0], -v[1])}, {cplx(v[0], v[1]), -v[2]}};
}

Matrix mk_operator(const PartySettings& s) {
  s.validate();
  return build_mk(s.a, s.a_prime).first;
}

Matrix mk_operator_primed(const PartySettings& s) {
  s.validate();
  return build_mk(s.a, s.a_prime).second;
}

std::vector<double> mk_coefficients(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("mk_coefficients: n must be in [1, 12]");
  std::vector<double> c{1.0, 0.0}, cp{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> nc(c.size() * 2), ncp(c.size() * 2);
    for (std::size_t s = 0; s < c.size(); ++s) {
      nc[2 * s] = 0.5 * (c[s] + cp[s]);
      nc[2 * s + 1] = 0.5 * (c[s] - cp[s]);
      ncp[2 * s] = 0.5 * (cp[s] - c[s]);
      ncp[2 * s + 1] = 0.5 * (cp[s] + c[s]);
    }
    c = std::move(nc);
    cp = std::move(ncp);
  }
  return c;
}

double mk_algebraic_max(int n) {
  double s = 0.0;
  for (double c : mk_coefficients(n)) s += std::abs(c);
  return s;
}

double mk_expectation(const Matrix& rho, const PartySettings& s) {
  s.validate();
  if (qubit_count(rho) != s.parties()) throw std::invalid_argument("mk_expectation: party count mismatch");
  return raw_expectation(rho, s.a, s.a_prime);
}

MkResult mk_quantum_value(const Matrix& rho) {
  const int n = qubit_count(rho);
  if (n < 1 || n > 8) throw std::invalid_argument("mk_quantum_value: n must be in [1, 8]");
  constexpr int kGrid = 16;
  constexpr int kRefine = 4;
  const double step = 2.0 * std::numbers::pi / kGrid;
  const double half_pi = 0.5 * std::numbers::pi;

  // Party-symmetric starts; each plane maps a pair of in-plane angles to (theta, phi) pairs.
  struct Start {
    double value;
    std::vector<double> angles;
  };
  std::vector<Start> starts;
  auto in_plane = [&](int plane, double u) -> std::pair<double, double> {
    switch (plane) {
      case 0: return {half_pi, u};                                  // XY
      case 1: return {u, 0.0};                                      // XZ
      default: return {u, half_pi};                                 // YZ
    }
  };
  for (int plane = 0; plane < 3; ++plane)
    for (int i = 0; i < kGrid; ++i)
      for (int j = 0; j < kGrid; ++j) {
        const auto [ta, pa] = in_plane(plane, i * step);
        const auto [tb, pb] = in_plane(plane, j * step);
        std::vector<double> x;
        for (int k = 0; k < n; ++k) x.insert(x.end(), {ta, pa, tb, pb});
        const auto s = PartySettings::from_angles(x);
        starts.push_back({raw_expectation(rho, s.a, s.a_prime), std::move(x)});
      }
  std::stable_sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) { return a.value > b.value; });

  const Objective objective = [&](std::span<const double> x) {
    const auto s = PartySettings::from_angles(x);
    return -raw_expectation(rho, s.a, s.a_prime);
  };
  SimplexOptions opts;
  opts.initial_step = 0.2;
  opts.diameter_tol = 1e-7;
  opts.max_evaluations = 4000 * n;

  MkResult best;
  best.beta_q = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < kRefine && r < static_cast<int>(starts.size()); ++r) {
    const auto nm = nelder_mead(objective, starts[r].angles, opts);
    PartySettings s = PartySettings::from_angles(nm.x);
    const auto [value, stalled] = seesaw(rho, s);
    if (value > best.beta_q) {
      best.beta_q = value;
      best.settings = std::move(s);
      best.converged = stalled;
    }
  }
  // The algebraic maximum is a hard ceiling; anything above it is rounding.
  best.beta_q = std::min(best.beta_q, mk_algebraic_max(n));
  return best;
}

double success_probability(double beta_q, double beta_nl) {
  if (!(beta_nl >= 1.0)) throw std::invalid_argument("success_probability: beta_nl must be >= 1");
  if (!(beta_q >= 0.0 && beta_q <= beta_nl)) throw std::invalid_argument("success_probability: beta_q outside [0, beta_nl]");
  return 0.5 * (1.0 + beta_q / beta_nl);
}

double classical_success_ceiling(int n) { return success_probability(1.0, mk_algebraic_max(n)); }

}  // namespace ghzlab
