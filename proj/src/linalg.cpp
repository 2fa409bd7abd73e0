#include "twistlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twistlab {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::column(std::size_t c) const { return columns(c, 1); }

std::vector<Complex> ComplexMatrix::column_vector(std::size_t c) const {
  std::vector<Complex> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ComplexMatrix ComplexMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("ComplexMatrix::columns");
  ComplexMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix m = a;
  for (auto& v : m.data_) v *= s;
  return m;
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& input, double tol, int max_sweeps) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double threshold = tol * std::max(1.0, input.frobenius_norm());
  int sweep = 0;
  while (off_diagonal_mass(a) > threshold) {
    if (sweep == max_sweeps)
      throw ToleranceError("hermitian_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        // Phase-rotate to a real symmetric 2x2 block, then a classical rotation.
        const Complex phase = std::conj(b) / mag;  // e^{-i arg b}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * phase;
        const Complex uqq = c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen result;
  result.sweeps = sweep;
  result.values.resize(n);
  result.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const auto eig = hermitian_eigen(a.adjoint() * a);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

ComplexMatrix null_space(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.cols();
  if (n == 0) return ComplexMatrix(0, 0);
  if (a.rows() == 0) return ComplexMatrix::identity(n);
  const auto eig = hermitian_eigen(a.adjoint() * a);
  const double largest = std::sqrt(std::max(0.0, eig.values.back()));
  const double threshold = tol * std::max(1.0, largest);
  std::size_t count = 0;
  while (count < n && std::sqrt(std::max(0.0, eig.values[count])) <= threshold) ++count;
  return eig.vectors.columns(0, count);
}

ComplexMatrix lowest_eigenspace(const ComplexMatrix& hermitian, double cluster_tol) {
  if (hermitian.rows() == 0) return ComplexMatrix(0, 0);
  const auto eig = hermitian_eigen(hermitian);
  std::size_t count = 0;
  while (count < eig.values.size() && eig.values[count] <= eig.values[0] + cluster_tol) ++count;
  return eig.vectors.columns(0, count);
}

}  // namespace twistlab
