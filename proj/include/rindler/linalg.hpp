#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "rindler/errors.hpp"

namespace rindler {

using Complex = std::complex<double>;

/// Dense square complex matrix, dimension 2..8, row-major storage.
///
/// The universal carrier for states and operators in this library. Values are
/// immutable in spirit: operations return new matrices, and all functions in
/// this header are pure, so matrices can be shared freely across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(int dim);

  /// Row-major entries; entries.size() must equal dim*dim.
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);

  /// Rank-1 projector |v><v| from a state vector.
  static ComplexMatrix outer(std::span<const Complex> v);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(int i, int j) const { return entries_[i * dim_ + j]; }

  std::span<const Complex> entries() const { return entries_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  /// max_ij |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& other) const;

  /// max_ij |a_ij - a*_ji|
  double hermiticity_defect() const;

  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

/// Ordered tensor-factor dimensions of a composite space. The first factor is
/// the most significant in the composite index: for qubits, |lmn> <-> 4l+2m+n.
struct SubsystemDims {
  std::vector<int> factors;

  static SubsystemDims qubits(int n);

  int total() const;

  /// Throws DimensionError unless the product of factors equals m.dim().
  void check_against(const ComplexMatrix& m) const;
};

/// Eigendecomposition of a Hermitian matrix. Values sorted descending;
/// vectors, when requested, are the orthonormal columns of `vectors` in the
/// same order.
struct EigenResult {
  std::vector<double> values;
  std::optional<ComplexMatrix> vectors;
};

/// Kronecker product; (a(x)b)[(i*db+k),(j*db+l)] = a[i,j]*b[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every factor not listed in `keep` (ascending subsystem indices).
/// The kept factors stay in their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            std::span<const int> keep);

/// Transpose the indices of one tensor factor only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemDims& dims,
                                int subsystem);

/// Cyclic Jacobi diagonalization of a Hermitian matrix (dims <= 8).
/// Converges when the off-diagonal Frobenius norm falls below 1e-13,
/// hard cap 100 sweeps. Throws Error if the input is not Hermitian to 1e-12.
EigenResult hermitian_eigen(const ComplexMatrix& m, bool want_vectors = false);

/// S(rho) = -tr(rho log2 rho) in bits. Eigenvalues in [-1e-10, 0) are clamped
/// to zero; anything below -1e-10 is a NotAStateError.
double von_neumann_entropy(const ComplexMatrix& m);

/// Throws NotAStateError unless m is Hermitian (1e-12), unit trace (1e-12)
/// and PSD (min eigenvalue >= -1e-10).
void validate_density_matrix(const ComplexMatrix& m, const char* context);

/// Principal square root of a PSD Hermitian matrix via eigendecomposition;
/// eigenvalues in [-1e-10, 0) are clamped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

}  // namespace rindler
