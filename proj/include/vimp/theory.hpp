#pragma once

#include <span>
#include <vector>

namespace vimp {

// One evaluation point for the closed-form expressions: a single coefficient
// beta_i under the uniform-delta framework.
struct TheoryPoint {
  double delta = 0.0;
  int p = 2;
  long n = 2;
  double beta_i = 1.0;
  double noise_var = 0.1;

  void validate() const;
};

// Var(x_i) = 1 + (p-1) delta^2.
double var_x(const TheoryPoint& pt);

// Cov(x_i, x_j) = 2 delta + (p-2) delta^2 for i != j.
double cov_x_offdiag(const TheoryPoint& pt);

// PaP_i = beta_i sqrt(2 (1 + (p-1) delta^2)).
double pap_theoretical(const TheoryPoint& pt);

// Coefficient of absorption c(delta, p).
double c_theoretical(const TheoryPoint& pt);

// LOCO_i = beta_i sqrt((1-delta)^2 (1 + (p-1) c^2)
//                      + (2 delta + (p-2) delta^2) ((p-1) c - 1)^2).
double loco_exact(const TheoryPoint& pt, double c);

// LOCO_i = beta_i (1 - delta) sqrt(1 + c) with c = c_theoretical(pt).
double loco_simplified(const TheoryPoint& pt);

// First-order approximation beta_i (1 - delta). Documented helper only; the
// deviation from loco_simplified is bounded by
// beta_i (1 - delta) (sqrt(p/(p-1)) - 1).
double loco_approx(const TheoryPoint& pt);

// ((1 + (p-2) delta)^2 + (p-1) delta^2)
//   / ((n-1) (1-delta)^2 (1 + (p-1) delta)^2).
double xtx_inv_diag_theoretical(const TheoryPoint& pt);

// t_i = beta_i (1-delta) sqrt((n-1)(1 + (p-1) delta)^2
//        / (noise_var [(1 + (p-2) delta)^2 + (p-1) delta^2])).
double t_theoretical(const TheoryPoint& pt);

// Bessel-corrected PaP: pap_theoretical * (n-1)/n.
double pap_corrected(const TheoryPoint& pt);

// Degrees-of-freedom-adjusted LOCO: loco_simplified * sqrt(n/(n-p)).
double loco_corrected(const TheoryPoint& pt);

// The default simulation grid: deltas 0, 0.11, ..., 0.99; p in {3, 6, 9, 12};
// n in {20, 63, 200, 632, 2000}.
std::vector<TheoryPoint> paper_grid(double beta_i = 1.0, double noise_var = 0.1);

// Worst-case relative discrepancies of the three algebraic identities over a
// set of points:
//   (a) loco_exact(pt, c_theoretical(pt)) vs loco_simplified(pt)
//   (b) t_theoretical(pt) vs loco_simplified(pt) * sqrt((n-1)/noise_var)
//   (c) xtx_inv_diag_theoretical(pt) vs brute-force inversion of (n-1) A A^T
// c_perturbation shifts the conjectured c before identity (a); nonzero values
// exist so sensitivity of the check itself can be exercised.
struct ConsistencyReport {
  double max_loco_identity = 0.0;
  double max_t_bridge = 0.0;
  double max_xtx_inv = 0.0;
};

ConsistencyReport consistency_check(std::span<const TheoryPoint> grid,
                                    double c_perturbation = 0.0);

}  // namespace vimp
