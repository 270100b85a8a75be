#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vimp/datagen.hpp"
#include "vimp/matrix.hpp"

namespace vimp {

// Ordinary least squares fit of the intercept-free model y = X beta.
// resid_var uses the n - p denominator (n - p - 1 when the optional
// intercept is enabled), which is what makes the empirical t-statistics
// finite-sample correct.
struct LinearFit {
  std::vector<double> coef;             // length p, predictors only
  double intercept = 0.0;               // 0 unless fitted with an intercept
  bool has_intercept = false;
  double resid_var = 0.0;               // SSE / (n - dof)
  std::vector<double> xtx_inv_diag;     // diagonal of (X^T X)^{-1}, predictors only
  std::size_t n = 0;
  std::size_t p = 0;
};

// Solves the normal equations by Cholesky; falls back to Householder QR on X
// when the Gram matrix condition estimate exceeds 1e8 or a pivot fails.
// Throws RankDeficient when the system is numerically singular.
// The intercept flag exists for completeness but defaults off and is excluded
// from importance accounting.
LinearFit fit(const Dataset& data, bool include_intercept = false);

std::vector<double> predict(const LinearFit& fit, const Matrix& x);

// Mean squared error.
double mse(std::span<const double> pred, std::span<const double> y);

// t_i = coef_i / sqrt(resid_var * xtx_inv_diag_i).
std::vector<double> t_statistics(const LinearFit& fit);

}  // namespace vimp
