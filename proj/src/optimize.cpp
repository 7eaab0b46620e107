#include "ghzlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ghzlab {

MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty parameter vector");
  MinimizeResult res;

  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  auto diameter = [&] {
    const auto& best = pts[order[0]];
    double d = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += (pts[order[i]][k] - best[k]) * (pts[order[i]][k] - best[k]);
      d = std::max(d, std::sqrt(s));
    }
    return d;
  };
  auto along = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = c[k] + t * (w[k] - c[k]);
    return x;
  };

  sort_simplex();
  while (res.evaluations < opts.max_evaluations) {
    if (diameter() < opts.diameter_tol) {
      res.converged = true;
      break;
    }
    const std::size_t worst = order[n], second = order[n - 1], best = order[0];
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[order[i]][k] / static_cast<double>(n);

    const auto xr = along(centroid, pts[worst], -1.0);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const auto xe = along(centroid, pts[worst], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      const auto xc = outside ? along(centroid, xr, 0.5) : along(centroid, pts[worst], 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= n; ++i) {
          auto& p = pts[order[i]];
          p = along(pts[best], p, 0.5);
          vals[order[i]] = eval(p);
        }
      }
    }
    sort_simplex();
  }
  res.x = pts[order[0]];
  res.value = vals[order[0]];
  return res;
}

double halton(unsigned index, unsigned base) {
  double result = 0.0, f = 1.0;
  while (index > 0) {
    f /= base;
    result += f * (index % base);
    index /= base;
  }
  return result;
}

std::vector<double> halton_point(unsigned index, std::size_t dim) {
  static constexpr unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  if (dim > std::size(primes)) throw std::invalid_argument("halton_point: dimension too large");
  std::vector<double> x(dim);
  for (std::size_t k = 0; k < dim; ++k) x[k] = halton(index + 1, primes[k]);
  return x;
}

}  // namespace ghzlab
