#include "ghzlab/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ghzlab/optimize.hpp"
#include "ghzlab/states.hpp"

namespace ghzlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// exponent * log(base) with 0^0 = 1.
double log_pow(double base, int exponent) {
  if (exponent == 0) return 0.0;
  return base > 0.0 ? exponent * std::log(base) : kNegInf;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_binomial_term(int np, int k, double q, double r) {
  return log_binomial(np, k) + log_pow(q, k) + log_pow(r, np - k);
}

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("negativity: need n >= 2");
}

void require_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("negativity: p outside [0,1]");
}

}  // namespace

double negativity_bruteforce(const Matrix& rho, const Bipartition& cut) {
  const int n = qubit_count(rho);
  if (n > kMaxBruteForceQubits) throw std::invalid_argument("negativity_bruteforce: system too large");
  const double tn = trace_norm(partial_transpose(rho, cut.side_a));
  return std::max(0.0, tn - 1.0);
}

FCoefficients f_coefficients(int n, const NoiseParams& params, int mu) {
  if (mu < 0 || mu > n) throw std::invalid_argument("f_coefficients: mu outside [0, n]");
  const double q = 0.5 * params.p();
  auto f = [&](double s) {
    const double a = q * (params.alpha_z() + s * params.alpha_y());
    const double b = (1.0 - q) + s * q * params.alpha_x();
    const double t1 = log_pow(a, mu) + log_pow(b, n - mu);
    const double t2 = log_pow(a, n - mu) + log_pow(b, mu);
    return (t1 == kNegInf ? 0.0 : std::exp(t1)) + (t2 == kNegInf ? 0.0 : std::exp(t2));
  };
  return {mu, f(1.0), f(-1.0)};
}

double negativity_closed_form(int n, const NoiseParams& params) {
  require_n(n);
  if (params.alpha_y() > params.alpha_z())
    throw std::domain_error("negativity_closed_form: requires alpha_y <= alpha_z");
  const int np = n - 1;
  double total = 0.0;
  for (int mu = 0; mu <= np / 2; ++mu) {
    const auto lo = f_coefficients(n, params, mu);
    const auto hi = f_coefficients(n, params, mu + 1);
    const double c = std::exp(log_binomial(np, mu));
    total += c * (std::max(0.0, hi.f_minus - lo.f_plus) + std::max(0.0, lo.f_minus - hi.f_plus));
  }
  return total;
}

double negativity_dephasing(int n, double p) {
  require_n(n);
  require_p(p);
  // Same sum, rewritten as (1 - p) minus its binomial tail. The tail holds only positive
  // terms and is small where n is large, so lgamma rounding barely reaches the result.
  return (1.0 - p) - asymptotic_gap(n, p);
}

double weak_noise_approx(int n, double p, double epsilon) {
  require_n(n);
  require_p(p);
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("weak_noise_approx: epsilon outside [0,1]");
  return std::pow(1.0 - p, n * epsilon + 1.0 - epsilon);
}

double log_asymptotic_gap(int n, double p) {
  require_n(n);
  require_p(p);
  if (p == 1.0) return kNegInf;
  // gap / (1 - p) = 2 P(X > floor(n'/2)) + [n' even] P(X = n'/2),  X ~ Bin(n', p/2).
  // An even n' gives exactly the value for n' - 1, so odd n reuses n - 1: tied sizes
  // then agree bit for bit and n' is always odd here.
  const int np = n % 2 == 0 ? n - 1 : n - 2;
  const double q = 0.5 * p, r = 1.0 - q;
  std::vector<double> logs;
  for (int k = np / 2 + 1; k <= np; ++k) logs.push_back(std::log(2.0) + log_binomial_term(np, k, q, r));
  const double m = *std::max_element(logs.begin(), logs.end());
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double l : logs) s += std::exp(l - m);
  return std::log(1.0 - p) + m + std::log(s);
}

double asymptotic_gap(int n, double p) {
  const double l = log_asymptotic_gap(n, p);
  return l == kNegInf ? 0.0 : std::exp(l);
}

std::vector<double> ordering_chain(std::span<const Matrix> family) {
  std::vector<double> out;
  out.reserve(family.size());
  for (const auto& rho : family) out.push_back(negativity_bruteforce(rho, Bipartition::one_vs_rest(0)));
  return out;
}

bool is_non_decreasing(std::span<const double> values, double slack) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1] - slack) return false;
  return true;
}

std::vector<Matrix> transversal_ghz_family(int n_min, int n_max, double p, double visibility) {
  std::vector<Matrix> out;
  for (int n = n_min; n <= n_max; ++n)
    out.push_back(dephasing_channel(add_white_noise(ghz_transversal(n), visibility), p));
  return out;
}

std::vector<Matrix> bare_ghz_family(int n_min, int n_max, double p, double visibility) {
  std::vector<Matrix> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(dephasing_channel(add_white_noise(ghz(n), visibility), p));
  return out;
}

std::vector<Matrix> graph_family(const Graph& top, double p, double visibility) {
  const auto steps = top.size() >= 3 ? reduction_sequence(top) : std::vector<ReductionStep>{};
  auto graphs = reduce_graph(top, steps);
  std::reverse(graphs.begin(), graphs.end());
  std::vector<Matrix> out;
  for (const auto& g : graphs)
    out.push_back(dephasing_channel(add_white_noise(transversal_graph_encoding(g).state, visibility), p));
  return out;
}

Matrix encoding_rotation(double theta, double phi) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const cplx e0 = std::polar(1.0, -0.5 * phi), e1 = std::polar(1.0, 0.5 * phi);
  return {{e0 * c, -e0 * s}, {e1 * s, e1 * c}};
}

double rotated_ghz_negativity(int n, double p, double theta, double phi) {
  const Matrix u = encoding_rotation(theta, phi);
  StateVector psi = ghz_vector(n);
  for (int k = 0; k < n; ++k) psi = apply_single_qubit(psi, u, k);
  return negativity_bruteforce(dephasing_channel(outer(psi), p), Bipartition::one_vs_rest(0));
}

BasisScanResult basis_scan(int n, double p) {
  if (n < 2 || n > 5) throw std::invalid_argument("basis_scan: n must be in [2, 5]");
  require_p(p);
  constexpr int kGrid = 64;
  constexpr int kStarts = 5;
  const double dtheta = std::numbers::pi / kGrid, dphi = 2.0 * std::numbers::pi / kGrid;

  struct Sample {
    double value;
    int index;
  };
  std::vector<Sample> grid;
  grid.reserve(kGrid * kGrid);
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j)
      grid.push_back({rotated_ghz_negativity(n, p, i * dtheta, j * dphi), i * kGrid + j});
  std::stable_sort(grid.begin(), grid.end(), [](const Sample& a, const Sample& b) { return a.value > b.value; });

  BasisScanResult best;
  best.best_negativity = grid.front().value;
  best.theta = (grid.front().index / kGrid) * dtheta;
  best.phi = (grid.front().index % kGrid) * dphi;
  best.converged = true;

  const Objective objective = [&](std::span<const double> x) { return -rotated_ghz_negativity(n, p, x[0], x[1]); };
  SimplexOptions opts;
  opts.initial_step = dtheta;
  opts.diameter_tol = 1e-8;
  for (int s = 0; s < kStarts; ++s) {
    const int idx = grid[s].index;
    const auto r = nelder_mead(objective, {(idx / kGrid) * dtheta, (idx % kGrid) * dphi}, opts);
    best.converged = best.converged && r.converged;
    if (-r.value > best.best_negativity) {
      best.best_negativity = -r.value;
      best.theta = r.x[0];
      best.phi = r.x[1];
    }
  }
  best.hadamard_negativity = rotated_ghz_negativity(n, p, 0.5 * std::numbers::pi, 0.0);
  return best;
}

}  // namespace ghzlab
