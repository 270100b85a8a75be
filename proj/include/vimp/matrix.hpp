#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vimp {

// Dense row-major matrix of doubles. Small sizes throughout this project
// (p <= 20 columns), so no blocking or BLAS; plain loops are accurate and
// fast enough.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

// X^T X for an n x p matrix, returned as p x p.
Matrix gram(const Matrix& x);

// X^T y.
std::vector<double> transpose_times(const Matrix& x, std::span<const double> y);

// In-place Cholesky factorization A = L L^T of a symmetric positive-definite
// matrix (lower triangle written, upper left untouched). Returns false on a
// non-positive pivot.
bool cholesky_factor(Matrix& a);

// Solves L L^T x = b given the lower-triangular factor.
std::vector<double> cholesky_solve(const Matrix& chol_lower, std::span<const double> b);

// Full inverse via Gauss-Jordan elimination with partial pivoting. Throws
// RankDeficient on a numerically singular matrix. This is the brute-force
// oracle route; keep it free of structure-exploiting shortcuts.
Matrix invert(Matrix a);

double norm1(const Matrix& a);
double max_abs(std::span<const double> v);

}  // namespace vimp
