// Dense complex linear algebra for small multi-qubit systems.
//
// Qubit indices are big-endian: qubit 0 is the most significant bit of a
// computational-basis label, so for an N-qubit state the bit of qubit k in
// label b is (b >> (N - 1 - k)) & 1.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ghzlab {

using cplx = std::complex<double>;
using StateVector = std::vector<cplx>;

/// Square complex matrix stored row-major.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> d);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  cplx trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_entry(const Matrix& a);
/// Largest |a(i,j) - conj(a(j,i))|.
double hermiticity_error(const Matrix& a);

/// Number of qubits for a 2^N-dimensional operator; throws if dim is not a power of two.
int qubit_count(const Matrix& m);
int qubit_count(std::size_t dim);

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
Matrix H();
}  // namespace pauli

Matrix kron(const Matrix& a, const Matrix& b);
Matrix outer(const StateVector& ket);

/// U_k rho U_k^dagger with U acting on qubit k only. The full 2^N operator is never formed.
Matrix apply_single_qubit(const Matrix& rho, const Matrix& u, int qubit);
/// Same conjugation applied on every qubit.
Matrix apply_on_all(const Matrix& rho, const Matrix& u);
/// (I..u..I)|psi>.
StateVector apply_single_qubit(const StateVector& psi, const Matrix& u, int qubit);

/// Reduced state on `keep` (sorted ascending, kept in that order).
Matrix partial_trace(const Matrix& rho, std::span<const int> keep);
/// Transpose of the qubits in `part`. Proper nonempty subset required.
Matrix partial_transpose(const Matrix& rho, std::span<const int> part);

struct Spectrum {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
};

/// Cyclic Jacobi eigensolver for Hermitian input. Throws std::invalid_argument if
/// the input is not Hermitian within 1e-10 (relative to its largest entry).
Spectrum hermitian_eig(const Matrix& h);
/// Eigenvalues only, same algorithm without accumulating vectors.
std::vector<double> hermitian_eigenvalues(const Matrix& h);

double trace_norm(const Matrix& a);
/// Entropy in bits with 0 log 0 = 0. Throws on eigenvalues below -1e-10.
double von_neumann_entropy(const Matrix& rho);
/// Shannon entropy in bits of a probability vector; entries <= 0 contribute nothing.
double shannon_entropy(std::span<const double> probs);
/// S(rho || xi) in bits. Returns +infinity when supp(rho) is not inside supp(xi).
double relative_entropy(const Matrix& rho, const Matrix& xi);

/// Checks the density-matrix invariants (Hermitian, unit trace, PSD) at the given tolerances.
bool is_density_matrix(const Matrix& rho, double tol_herm = 1e-12, double tol_trace = 1e-12,
                       double tol_eig = 1e-10);

}  // namespace ghzlab
