#include "ghzlab/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace ghzlab {

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) : Matrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("Matrix: rows must form a square");
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  const std::size_t d = a.dim_;
  Matrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double max_abs_entry(const Matrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double hermiticity_error(const Matrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

int qubit_count(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) throw std::invalid_argument("dimension is not a power of two");
  return std::countr_zero(dim);
}

int qubit_count(const Matrix& m) { return qubit_count(m.dim()); }

namespace pauli {
Matrix I() { return Matrix::identity(2); }
Matrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
Matrix Y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
Matrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
Matrix H() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}
}  // namespace pauli

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

Matrix outer(const StateVector& ket) {
  Matrix out(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r)
    for (std::size_t c = 0; c < ket.size(); ++c) out(r, c) = ket[r] * std::conj(ket[c]);
  return out;
}

namespace {

std::size_t qubit_mask(int n, int qubit) {
  if (qubit < 0 || qubit >= n) throw std::out_of_range("qubit index out of range");
  return std::size_t{1} << (n - 1 - qubit);
}

void require_unitary(const Matrix& u) {
  if (u.dim() != 2) throw std::invalid_argument("single-qubit operator must be 2x2");
  if (max_abs_diff(u * u.adjoint(), Matrix::identity(2)) > 1e-12)
    throw std::invalid_argument("single-qubit operator is not unitary");
}

std::size_t subset_mask(int n, std::span<const int> qubits) {
  std::size_t mask = 0;
  for (int q : qubits) {
    const std::size_t b = qubit_mask(n, q);
    if (mask & b) throw std::invalid_argument("repeated qubit in subset");
    mask |= b;
  }
  return mask;
}

}  // namespace

Matrix apply_single_qubit(const Matrix& rho, const Matrix& u, int qubit) {
  require_unitary(u);
  const int n = qubit_count(rho);
  const std::size_t bit = qubit_mask(n, qubit);
  const std::size_t d = rho.dim();
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  Matrix out = rho;
  for (std::size_t r0 = 0; r0 < d; ++r0) {
    if (r0 & bit) continue;
    const std::size_t r1 = r0 | bit;
    for (std::size_t c = 0; c < d; ++c) {
      const cplx x0 = out(r0, c), x1 = out(r1, c);
      out(r0, c) = u00 * x0 + u01 * x1;
      out(r1, c) = u10 * x0 + u11 * x1;
    }
  }
  const cplx v00 = std::conj(u00), v01 = std::conj(u01), v10 = std::conj(u10), v11 = std::conj(u11);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c0 = 0; c0 < d; ++c0) {
      if (c0 & bit) continue;
      const std::size_t c1 = c0 | bit;
      const cplx x0 = out(r, c0), x1 = out(r, c1);
      out(r, c0) = x0 * v00 + x1 * v01;
      out(r, c1) = x0 * v10 + x1 * v11;
    }
  return out;
}

Matrix apply_on_all(const Matrix& rho, const Matrix& u) {
  Matrix out = rho;
  const int n = qubit_count(rho);
  for (int k = 0; k < n; ++k) out = apply_single_qubit(out, u, k);
  return out;
}

StateVector apply_single_qubit(const StateVector& psi, const Matrix& u, int qubit) {
  require_unitary(u);
  const int n = qubit_count(psi.size());
  const std::size_t bit = qubit_mask(n, qubit);
  StateVector out = psi;
  for (std::size_t i0 = 0; i0 < psi.size(); ++i0) {
    if (i0 & bit) continue;
    const std::size_t i1 = i0 | bit;
    out[i0] = u(0, 0) * psi[i0] + u(0, 1) * psi[i1];
    out[i1] = u(1, 0) * psi[i0] + u(1, 1) * psi[i1];
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, std::span<const int> keep) {
  const int n = qubit_count(rho);
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  const std::size_t keep_mask = subset_mask(n, kept);
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!(keep_mask & qubit_mask(n, q))) traced.push_back(q);

  // Full-index contribution of each reduced label, for the kept and traced subsystems.
  auto scatter = [n](const std::vector<int>& qubits) {
    const std::size_t m = qubits.size();
    std::vector<std::size_t> idx(std::size_t{1} << m, 0);
    for (std::size_t label = 0; label < idx.size(); ++label)
      for (std::size_t j = 0; j < m; ++j)
        if (label & (std::size_t{1} << (m - 1 - j))) idx[label] |= qubit_mask(n, qubits[j]);
    return idx;
  };
  const auto kidx = scatter(kept);
  const auto tidx = scatter(traced);

  Matrix out(kidx.size());
  for (std::size_t i = 0; i < kidx.size(); ++i)
    for (std::size_t j = 0; j < kidx.size(); ++j) {
      cplx s = 0.0;
      for (std::size_t t : tidx) s += rho(kidx[i] | t, kidx[j] | t);
      out(i, j) = s;
    }
  return out;
}

Matrix partial_transpose(const Matrix& rho, std::span<const int> part) {
  const int n = qubit_count(rho);
  if (part.empty() || static_cast<int>(part.size()) >= n)
    throw std::invalid_argument("partial_transpose: part must be a proper nonempty subset");
  const std::size_t m = subset_mask(n, part);
  const std::size_t d = rho.dim();
  Matrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t i2 = (i & ~m) | (j & m);
      const std::size_t j2 = (j & ~m) | (i & m);
      out(i, j) = rho(i2, j2);
    }
  return out;
}

namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

void require_hermitian(const Matrix& h) {
  if (hermiticity_error(h) > 1e-10 * std::max(1.0, max_abs_entry(h)))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");
}

template <bool WithVectors>
Spectrum jacobi(const Matrix& h) {
  require_hermitian(h);
  const std::size_t d = h.dim();
  Matrix a(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
  Matrix v = WithVectors ? Matrix::identity(d) : Matrix();

  double frob = 0.0;
  for (const auto& x : a.data()) frob += std::norm(x);
  const double scale = std::max(std::sqrt(frob), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= kJacobiTolerance * scale) break;

    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx ph = std::conj(apq / mag);
        // Rotation G on (p, q): phase diag(1, ph) followed by a real Givens rotation.
        const cplx gpp = c, gpq = s, gqp = -s * ph, gqq = c * ph;

        for (std::size_t k = 0; k < d; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if constexpr (WithVectors) {
          for (std::size_t k = 0; k < d; ++k) {
            const cplx vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * gpp + vkq * gqp;
            v(k, q) = vkp * gpq + vkq * gqq;
          }
        }
      }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  Spectrum out;
  out.values.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.values[i] = a(order[i], order[i]).real();
  if constexpr (WithVectors) {
    out.vectors = Matrix(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

Spectrum hermitian_eig(const Matrix& h) { return jacobi<true>(h); }

std::vector<double> hermitian_eigenvalues(const Matrix& h) { return jacobi<false>(h).values; }

double trace_norm(const Matrix& a) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(a)) s += std::abs(ev);
  return s;
}

double shannon_entropy(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) s -= xlog2x(p);
  return s;
}

double von_neumann_entropy(const Matrix& rho) {
  const auto ev = hermitian_eigenvalues(rho);
  if (!ev.empty() && ev.front() < -1e-10)
    throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
  return shannon_entropy(ev);
}

double relative_entropy(const Matrix& rho, const Matrix& xi) {
  if (rho.dim() != xi.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  constexpr double kSupport = 1e-12;
  const Spectrum sx = hermitian_eig(xi);
  const std::size_t d = rho.dim();
  double cross = 0.0;  // Tr(rho log2 xi)
  for (std::size_t k = 0; k < d; ++k) {
    // <v_k| rho |v_k>
    cplx w = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < d; ++j) row += rho(i, j) * sx.vectors(j, k);
      w += std::conj(sx.vectors(i, k)) * row;
    }
    const double weight = w.real();
    if (sx.values[k] <= kSupport) {
      if (weight > kSupport) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(sx.values[k]);
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return std::max(value, 0.0);
}

bool is_density_matrix(const Matrix& rho, double tol_herm, double tol_trace, double tol_eig) {
  if (rho.dim() == 0) return false;
  if (hermiticity_error(rho) > tol_herm) return false;
  if (std::abs(rho.trace() - 1.0) > tol_trace) return false;
  return hermitian_eigenvalues(rho).front() >= -tol_eig;
}

}  // namespace ghzlab
