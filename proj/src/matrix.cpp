#include "vimp/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "vimp/errors.hpp"

namespace vimp {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matvec: size mismatch");
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
    out[i] = s;
  }
  return out;
}

Matrix gram(const Matrix& x) {
  const std::size_t p = x.cols();
  Matrix g(p, p);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    for (std::size_t i = 0; i < p; ++i) {
      const double xi = row[i];
      for (std::size_t j = i; j < p; ++j) {
        g(i, j) += xi * row[j];
      }
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
  }
  return g;
}

std::vector<double> transpose_times(const Matrix& x, std::span<const double> y) {
  if (x.rows() != y.size()) throw DimensionMismatch("transpose_times: size mismatch");
  std::vector<double> out(x.cols(), 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    const double yr = y[r];
    for (std::size_t j = 0; j < x.cols(); ++j) out[j] += row[j] * yr;
  }
  return out;
}

bool cholesky_factor(Matrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / ljj;
    }
  }
  return true;
}

std::vector<double> cholesky_solve(const Matrix& chol_lower, std::span<const double> b) {
  const std::size_t n = chol_lower.rows();
  if (b.size() != n) throw DimensionMismatch("cholesky_solve: size mismatch");
  std::vector<double> x(b.begin(), b.end());
  // Forward: L z = b
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol_lower(i, k) * x[k];
    x[i] = s / chol_lower(i, i);
  }
  // Backward: L^T x = z
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= chol_lower(k, ii) * x[k];
    x[ii] = s / chol_lower(ii, ii);
  }
  return x;
}

Matrix invert(Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DimensionMismatch("invert: matrix not square");
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) throw RankDeficient("invert: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const double d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double norm1(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

double max_abs(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) {
    const double a = std::abs(x);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace vimp
