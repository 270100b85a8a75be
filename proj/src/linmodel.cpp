#include "vimp/linmodel.hpp"

#include <cmath>
#include <limits>

#include "vimp/errors.hpp"

namespace vimp {

namespace {

constexpr double kQrFallbackCondition = 1e8;
constexpr double kSingularCondition = 1.0 / std::numeric_limits<double>::epsilon();

struct NormalEquationSolution {
  std::vector<double> coef;
  std::vector<double> gram_inv_diag;
  bool ok = false;
};

// Cholesky route on the Gram matrix. Reports failure (caller falls back to
// QR) when a pivot is non-positive or the 1-norm condition estimate of the
// Gram matrix exceeds the fallback threshold.
NormalEquationSolution solve_cholesky(const Matrix& design, std::span<const double> y) {
  NormalEquationSolution out;
  Matrix g = gram(design);
  const double g_norm = norm1(g);
  Matrix factor = g;
  if (!cholesky_factor(factor)) return out;

  const std::size_t m = g.rows();
  // (X^T X)^{-1} = L^{-T} L^{-1}; column i of L^{-1} gives diag entry i and
  // the full inverse gives an exact 1-norm condition number (m is tiny).
  Matrix inv(m, m);
  std::vector<double> e(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    e.assign(m, 0.0);
    e[i] = 1.0;
    const std::vector<double> col = cholesky_solve(factor, e);
    for (std::size_t r = 0; r < m; ++r) inv(r, i) = col[r];
  }
  const double cond = g_norm * norm1(inv);
  if (cond > kQrFallbackCondition) return out;

  out.coef = cholesky_solve(factor, transpose_times(design, y));
  out.gram_inv_diag.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.gram_inv_diag[i] = inv(i, i);
  out.ok = true;
  return out;
}

// Householder QR on the design matrix itself; better conditioned than the
// normal equations for near-collinear columns (delta close to 1).
NormalEquationSolution solve_qr(const Matrix& design, std::span<const double> y) {
  const std::size_t n = design.rows();
  const std::size_t m = design.cols();
  Matrix a = design;
  std::vector<double> qty(y.begin(), y.end());
  std::vector<double> r_diag(m, 0.0);

  for (std::size_t k = 0; k < m; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw RankDeficient("fit: design matrix is rank deficient");
    // Reflector sign matches the pivot so v_k = 1 + |x_k|/norm stays in [1, 2].
    if (a(k, k) < 0.0) norm = -norm;
    for (std::size_t i = k; i < n; ++i) a(i, k) /= norm;
    a(k, k) += 1.0;

    // Apply the reflector to the trailing columns and to y.
    for (std::size_t j = k + 1; j < m; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += a(i, k) * a(i, j);
      s = -s / a(k, k);
      for (std::size_t i = k; i < n; ++i) a(i, j) += s * a(i, k);
    }
    double s = 0.0;
    for (std::size_t i = k; i < n; ++i) s += a(i, k) * qty[i];
    s = -s / a(k, k);
    for (std::size_t i = k; i < n; ++i) qty[i] += s * a(i, k);
    r_diag[k] = -norm;
  }

  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (double d : r_diag) {
    const double ad = std::abs(d);
    dmax = std::max(dmax, ad);
    dmin = std::min(dmin, ad);
  }
  // Condition of the Gram matrix is the square of the condition of R.
  if (dmin == 0.0 || (dmax / dmin) * (dmax / dmin) > kSingularCondition) {
    throw RankDeficient("fit: normal-equation system numerically singular");
  }

  // Back-substitute R beta = Q^T y. R's strict upper triangle sits above the
  // stored reflectors; its diagonal lives in r_diag.
  NormalEquationSolution out;
  out.coef.assign(m, 0.0);
  for (std::size_t kk = m; kk-- > 0;) {
    double s = qty[kk];
    for (std::size_t j = kk + 1; j < m; ++j) s -= a(kk, j) * out.coef[j];
    out.coef[kk] = s / r_diag[kk];
  }

  // diag of (X^T X)^{-1} = row norms of R^{-1}: solve R^T u = e_i (forward).
  out.gram_inv_diag.assign(m, 0.0);
  std::vector<double> u(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) u[k] = 0.0;
    for (std::size_t k = i; k < m; ++k) {
      double s = (k == i) ? 1.0 : 0.0;
      for (std::size_t j = i; j < k; ++j) s -= a(j, k) * u[j];
      u[k] = s / r_diag[k];
    }
    double d = 0.0;
    for (std::size_t k = i; k < m; ++k) d += u[k] * u[k];
    out.gram_inv_diag[i] = d;
  }
  out.ok = true;
  return out;
}

}  // namespace

LinearFit fit(const Dataset& data, bool include_intercept) {
  const std::size_t n = data.spec.n;
  const std::size_t p = data.spec.p;
  const std::size_t m = p + (include_intercept ? 1 : 0);
  if (n <= m) throw RankDeficient("fit: need n > p observations");
  if (data.x.rows() != n || data.x.cols() != p || data.y.size() != n) {
    throw DimensionMismatch("fit: dataset shape inconsistent with its spec");
  }

  // Intercept column appended last so predictor indices are unchanged.
  Matrix design = data.x;
  if (include_intercept) {
    Matrix d(n, m);
    for (std::size_t r = 0; r < n; ++r) {
      const auto src = data.x.row(r);
      auto dst = d.row(r);
      for (std::size_t j = 0; j < p; ++j) dst[j] = src[j];
      dst[p] = 1.0;
    }
    design = std::move(d);
  }

  NormalEquationSolution sol = solve_cholesky(design, data.y);
  if (!sol.ok) sol = solve_qr(design, data.y);

  double sse = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = design.row(r);
    double pred = 0.0;
    for (std::size_t j = 0; j < m; ++j) pred += row[j] * sol.coef[j];
    const double e = data.y[r] - pred;
    sse += e * e;
  }

  LinearFit out;
  out.coef.assign(sol.coef.begin(), sol.coef.begin() + static_cast<std::ptrdiff_t>(p));
  out.intercept = include_intercept ? sol.coef[p] : 0.0;
  out.has_intercept = include_intercept;
  out.resid_var = sse / static_cast<double>(n - m);
  out.xtx_inv_diag.assign(sol.gram_inv_diag.begin(),
                          sol.gram_inv_diag.begin() + static_cast<std::ptrdiff_t>(p));
  out.n = n;
  out.p = p;
  return out;
}

std::vector<double> predict(const LinearFit& fit, const Matrix& x) {
  if (x.cols() != fit.p) throw DimensionMismatch("predict: column count differs from fit");
  std::vector<double> out = matvec(x, fit.coef);
  if (fit.has_intercept) {
    for (double& v : out) v += fit.intercept;
  }
  return out;
}

double mse(std::span<const double> pred, std::span<const double> y) {
  if (pred.size() != y.size()) throw DimensionMismatch("mse: length mismatch");
  if (pred.empty()) throw EmptyInput("mse: empty input");
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - y[i];
    s += d * d;
  }
  return s / static_cast<double>(pred.size());
}

std::vector<double> t_statistics(const LinearFit& fit) {
  if (!(fit.resid_var > 0.0)) {
    throw DegenerateFit("t_statistics: zero residual variance");
  }
  std::vector<double> t(fit.p);
  for (std::size_t i = 0; i < fit.p; ++i) {
    t[i] = fit.coef[i] / std::sqrt(fit.resid_var * fit.xtx_inv_diag[i]);
  }
  return t;
}

}  // namespace vimp
