#include "ghzlab/quantumness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ghzlab/channels.hpp"
#include "ghzlab/negativity.hpp"
#include "ghzlab/optimize.hpp"
#include "ghzlab/parallel.hpp"
#include "ghzlab/states.hpp"

namespace ghzlab {

ProductBasis ProductBasis::from_flat(std::span<const double> x) {
  if (x.size() % 2) throw std::invalid_argument("ProductBasis: odd number of angles");
  ProductBasis b;
  for (std::size_t k = 0; k < x.size(); k += 2) b.angles.emplace_back(x[k], x[k + 1]);
  return b;
}

namespace {

void require_match(const Matrix& rho, const ProductBasis& basis) {
  if (static_cast<int>(basis.angles.size()) != qubit_count(rho))
    throw std::invalid_argument("product basis size does not match the state");
}

bool is_trivial(const std::pair<double, double>& a) { return a.first == 0.0 && a.second == 0.0; }

Matrix to_basis(const Matrix& rho, const ProductBasis& basis) {
  Matrix out = rho;
  for (std::size_t k = 0; k < basis.angles.size(); ++k) {
    if (is_trivial(basis.angles[k])) continue;
    out = apply_single_qubit(out, encoding_rotation(basis.angles[k].first, basis.angles[k].second).adjoint(),
                             static_cast<int>(k));
  }
  return out;
}

}  // namespace

std::vector<double> basis_populations(const Matrix& rho, const ProductBasis& basis) {
  require_match(rho, basis);
  const Matrix r = to_basis(rho, basis);
  std::vector<double> pop(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) pop[i] = r(i, i).real();
  return pop;
}

Matrix classical_dephase(const Matrix& rho, const ProductBasis& basis) {
  const auto pop = basis_populations(rho, basis);
  Matrix out = Matrix::diagonal(pop);
  for (std::size_t k = 0; k < basis.angles.size(); ++k) {
    if (is_trivial(basis.angles[k])) continue;
    out = apply_single_qubit(out, encoding_rotation(basis.angles[k].first, basis.angles[k].second),
                             static_cast<int>(k));
  }
  return out;
}

double entropy_gap(const Matrix& rho, const ProductBasis& basis) {
  return std::max(0.0, shannon_entropy(basis_populations(rho, basis)) - von_neumann_entropy(rho));
}

QsResult qs(const Matrix& rho, const QsOptions& opts) {
  const int n = qubit_count(rho);
  if (n < 1 || n > 4) throw std::invalid_argument("qs: supported for 1..4 qubits");
  const double s_rho = von_neumann_entropy(rho);
  const std::size_t dim = 2 * static_cast<std::size_t>(n);

  const Objective objective = [&](std::span<const double> x) {
    return shannon_entropy(basis_populations(rho, ProductBasis::from_flat(x))) - s_rho;
  };
  SimplexOptions sopts;
  sopts.initial_step = 0.25;
  sopts.diameter_tol = 1e-7;

  QsResult best;
  best.value = std::numeric_limits<double>::infinity();
  bool all_converged = true;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const double before = best.value;
    const auto runs = parallel_map(opts.starts_per_round, opts.workers, [&](std::size_t i) {
      auto x0 = halton_point(static_cast<unsigned>(round * opts.starts_per_round + i), dim);
      for (std::size_t k = 0; k < dim; ++k) x0[k] *= (k % 2 == 0) ? std::numbers::pi : 2.0 * std::numbers::pi;
      return nelder_mead(objective, x0, sopts);
    });
    for (const auto& r : runs) {
      all_converged = all_converged && r.converged;
      if (r.value < best.value) {
        best.value = r.value;
        best.argmin_basis = ProductBasis::from_flat(r.x);
      }
    }
    best.restarts_used += opts.starts_per_round;
    if (before - best.value < opts.round_improvement_tol) {
      best.converged = all_converged;
      break;
    }
  }
  best.value = std::max(0.0, best.value);
  return best;
}

std::vector<double> qs_ordering_chain(int n_max, double p, const QsOptions& opts) {
  if (n_max < 2 || n_max > 4) throw std::invalid_argument("qs_ordering_chain: n_max must be in [2, 4]");
  std::vector<double> out;
  for (const auto& rho : transversal_ghz_family(2, n_max, p)) out.push_back(qs(rho, opts).value);
  return out;
}

BranchReport branch_decomposition_check(int n, double p, const QsOptions& opts) {
  if (n < 2 || n > 4) throw std::invalid_argument("branch_decomposition_check: n must be in [2, 4]");
  const Matrix rho = dephasing_channel(ghz_transversal(n), p);
  BranchReport rep;
  rep.qs_input = qs(rho, opts).value;
  rep.qs_composite = qs(dephasing_channel(rho, 0, 1.0), opts).value;
  const auto branches = measure_z(rho, 0);
  rep.qs_plus = qs(branches[0].post_state, opts).value;
  rep.qs_minus = qs(branches[1].post_state, opts).value;
  return rep;
}

}  // namespace ghzlab
