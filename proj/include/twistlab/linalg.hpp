#pragma once

#include <vector>

#include "twistlab/types.hpp"

namespace twistlab {

/// Dense row-major complex matrix. Dimensions here are tiny (at most the
/// number of arrows), so nothing is blocked or vectorized.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] ComplexMatrix column(std::size_t c) const;
  [[nodiscard]] std::vector<Complex> column_vector(std::size_t c) const;
  /// Columns [first, first + count).
  [[nodiscard]] ComplexMatrix columns(std::size_t first, std::size_t count) const;
  [[nodiscard]] double frobenius_norm() const;
  /// Largest entrywise modulus of (*this - other).
  [[nodiscard]] double max_abs_diff(const ComplexMatrix& other) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector for values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for a Hermitian matrix. Iterates until the
/// off-diagonal Frobenius mass drops below tol * max(1, ||A||_F); throws
/// ToleranceError if max_sweeps is exhausted first.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol = 1e-12, int max_sweeps = 100);

/// Operator 2-norm: sqrt of the largest eigenvalue of A^dagger A.
double spectral_norm(const ComplexMatrix& a);

/// Orthonormal basis (as columns) of ker(A). A singular value counts as zero
/// when it is at most tol * max(1, largest singular value).
ComplexMatrix null_space(const ComplexMatrix& a, double tol = 1e-6);

/// Orthonormal basis of the eigenspace of a Hermitian matrix belonging to
/// the eigenvalue cluster that contains its smallest eigenvalue.
ComplexMatrix lowest_eigenspace(const ComplexMatrix& hermitian, double cluster_tol = 1e-6);

}  // namespace twistlab
