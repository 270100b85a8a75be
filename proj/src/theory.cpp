#include "vimp/theory.hpp"

#include <cmath>

#include "vimp/datagen.hpp"
#include "vimp/errors.hpp"
#include "vimp/matrix.hpp"

namespace vimp {

void TheoryPoint::validate() const {
  if (p < 2) throw InvalidParameter("TheoryPoint: p must be at least 2");
  if (n < 1) throw InvalidParameter("TheoryPoint: n must be positive");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidParameter("TheoryPoint: delta must lie in [0, 1)");
  }
  if (!(noise_var > 0.0)) throw InvalidParameter("TheoryPoint: noise_var must be positive");
}

double var_x(const TheoryPoint& pt) {
  pt.validate();
  return 1.0 + (pt.p - 1) * pt.delta * pt.delta;
}

double cov_x_offdiag(const TheoryPoint& pt) {
  pt.validate();
  return 2.0 * pt.delta + (pt.p - 2) * pt.delta * pt.delta;
}

double pap_theoretical(const TheoryPoint& pt) {
  pt.validate();
  return pt.beta_i * std::sqrt(2.0 * (1.0 + (pt.p - 1) * pt.delta * pt.delta));
}

double c_theoretical(const TheoryPoint& pt) {
  pt.validate();
  const double d = pt.delta;
  const double p = pt.p;
  const double num = 2.0 * d + (p - 2.0) * d * d;
  const double den =
      1.0 - 4.0 * d + 2.0 * p * d + p * p * d * d - 3.0 * p * d * d + 3.0 * d * d;
  if (std::abs(den) < 1e-12) {
    throw InvalidParameter("c_theoretical: denominator vanishes");
  }
  return num / den;
}

double loco_exact(const TheoryPoint& pt, double c) {
  pt.validate();
  const double d = pt.delta;
  const double p = pt.p;
  const double s1 = (1.0 - d) * (1.0 - d) * (1.0 + (p - 1.0) * c * c);
  const double s2 =
      (2.0 * d + (p - 2.0) * d * d) * ((p - 1.0) * c - 1.0) * ((p - 1.0) * c - 1.0);
  return pt.beta_i * std::sqrt(s1 + s2);
}

double loco_simplified(const TheoryPoint& pt) {
  return pt.beta_i * (1.0 - pt.delta) * std::sqrt(1.0 + c_theoretical(pt));
}

double loco_approx(const TheoryPoint& pt) {
  pt.validate();
  return pt.beta_i * (1.0 - pt.delta);
}

double xtx_inv_diag_theoretical(const TheoryPoint& pt) {
  pt.validate();
  if (pt.n < 2) throw InvalidParameter("xtx_inv_diag_theoretical: n must exceed 1");
  const double d = pt.delta;
  const double p = pt.p;
  const double num = (1.0 + (p - 2.0) * d) * (1.0 + (p - 2.0) * d) + (p - 1.0) * d * d;
  const double den = (pt.n - 1.0) * (1.0 - d) * (1.0 - d) * (1.0 + (p - 1.0) * d) *
                     (1.0 + (p - 1.0) * d);
  return num / den;
}

double t_theoretical(const TheoryPoint& pt) {
  pt.validate();
  if (pt.n <= pt.p) throw InvalidParameter("t_theoretical: n must exceed p");
  const double d = pt.delta;
  const double p = pt.p;
  const double one_pm1 = 1.0 + (p - 1.0) * d;
  const double bracket = (1.0 + (p - 2.0) * d) * (1.0 + (p - 2.0) * d) + (p - 1.0) * d * d;
  return pt.beta_i * (1.0 - d) *
         std::sqrt((pt.n - 1.0) * one_pm1 * one_pm1 / (pt.noise_var * bracket));
}

double pap_corrected(const TheoryPoint& pt) {
  return pap_theoretical(pt) * (pt.n - 1.0) / static_cast<double>(pt.n);
}

double loco_corrected(const TheoryPoint& pt) {
  if (pt.n <= pt.p) throw InvalidParameter("loco_corrected: n must exceed p");
  return loco_simplified(pt) * std::sqrt(static_cast<double>(pt.n) / (pt.n - pt.p));
}

std::vector<TheoryPoint> paper_grid(double beta_i, double noise_var) {
  std::vector<TheoryPoint> grid;
  for (int k = 0; k < 10; ++k) {
    const double delta = 0.11 * k;
    for (int p : {3, 6, 9, 12}) {
      for (long n : {20L, 63L, 200L, 632L, 2000L}) {
        grid.push_back(TheoryPoint{delta, p, n, beta_i, noise_var});
      }
    }
  }
  return grid;
}

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace

ConsistencyReport consistency_check(std::span<const TheoryPoint> grid,
                                    double c_perturbation) {
  if (grid.empty()) throw EmptyInput("consistency_check: empty grid");
  ConsistencyReport report;
  for (const TheoryPoint& pt : grid) {
    const double c = c_theoretical(pt) + c_perturbation;
    report.max_loco_identity =
        std::max(report.max_loco_identity, rel_diff(loco_exact(pt, c), loco_simplified(pt)));

    if (pt.n > pt.p) {
      const double bridge = loco_simplified(pt) * std::sqrt((pt.n - 1.0) / pt.noise_var);
      report.max_t_bridge = std::max(report.max_t_bridge, rel_diff(t_theoretical(pt), bridge));
    }

    if (pt.n > 1) {
      const Matrix a = make_transform(static_cast<std::size_t>(pt.p), pt.delta);
      Matrix aat = matmul(a, a);  // A is symmetric, so A A^T = A A
      for (double& v : aat.data()) v *= (pt.n - 1.0);
      const Matrix inv = invert(aat);
      report.max_xtx_inv = std::max(
          report.max_xtx_inv, rel_diff(inv(0, 0), xtx_inv_diag_theoretical(pt)));
    }
  }
  return report;
}

}  // namespace vimp
