#include "relmatch/matrix.hpp"

#include <cmath>
#include <cstdint>

#include "relmatch/errors.hpp"
#include "relmatch/kernels.hpp"
#include "relmatch/rng.hpp"

namespace relmatch {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::mul_transposed(const Matrix& b) const {
  if (cols_ != b.cols_) throw ContractError("mul_transposed: shape mismatch");
  Matrix c(rows_, b.rows_);
  kernels::matmul_abt(data(), b.data(), c.data(), rows_, cols_, b.rows_);
  return c;
}

Matrix Matrix::tmul(const Matrix& b) const {
  if (rows_ != b.rows_) throw ContractError("tmul: shape mismatch");
  Matrix c(cols_, b.cols_);
  kernels::matmul_atb(data(), b.data(), c.data(), cols_, rows_, b.cols_);
  return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractError("matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractError("matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

bool Matrix::all_finite() const {
  for (double x : data_)
    if (!std::isfinite(x)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ContractError("matmul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

Matrix operator+(Matrix a, const Matrix& b) {
  a += b;
  return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
  a -= b;
  return a;
}

Matrix operator*(Matrix a, double s) {
  a *= s;
  return a;
}

Matrix operator*(double s, Matrix a) {
  a *= s;
  return a;
}

Matrix random_orthogonal(std::size_t n, std::uint64_t seed,
                         std::uint64_t stream) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = rng::gauss(rng::key(seed, stream, i, j));

  // Two rounds of modified Gram-Schmidt on the columns.
  for (int round = 0; round < 2; ++round) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t prev = 0; prev < j; ++prev) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += m(i, prev) * m(i, j);
        for (std::size_t i = 0; i < n; ++i) m(i, j) -= dot * m(i, prev);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += m(i, j) * m(i, j);
      norm = std::sqrt(norm);
      if (norm < 1e-12)
        throw NumericalError("random_orthogonal: degenerate column");
      for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
    }
  }
  return m;
}

}  // namespace relmatch
