#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace relmatch {

/// Dense row-major matrix of doubles. Value type; all arithmetic goes through
/// the kernels so the serial/OpenMP choice is made in one place.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transposed() const;
  /// this * b^T
  Matrix mul_transposed(const Matrix& b) const;
  /// this^T * b
  Matrix tmul(const Matrix& b) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  double frobenius_norm() const;
  double max_abs() const;
  double max_abs_diff(const Matrix& o) const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);

/// Orthonormalize the columns of a random Gaussian n-by-n draw (two rounds of
/// modified Gram-Schmidt). Test data and dataset construction helper.
Matrix random_orthogonal(std::size_t n, std::uint64_t seed,
                         std::uint64_t stream = 0x6f727468);

}  // namespace relmatch
