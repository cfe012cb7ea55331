#pragma once

#include <vector>

namespace ptwell {

enum class CriticalMethod { closed, bisect };

struct CriticalResult {
  int n_points = 0;
  double z_crit = 0.0;
  double bracket_lo = 0.0; // reality_defect(lo) <= eps
  double bracket_hi = 0.0; // reality_defect(hi) >  eps
  int iterations = 0;
  CriticalMethod method = CriticalMethod::bisect;
  bool multi_transition = false; // re-entrant real window seen in the pre-scan
};

/// Exact closed-form critical couplings, N in {3, 4, 5, 6}:
/// 9/4, 4*sqrt(2), 25*sqrt(5)/16, 9/2. Throws std::invalid_argument otherwise.
double z_critical_closed(int n_points);

/// Smallest Z > 0 at which the spectrum ceases to be real, by bisection on
/// the predicate reality_defect(N, Z) > 1e-7 after a coarse pre-scan of
/// [0, 16] in steps of 0.25. Bracket converged to width <= tol.
CriticalResult z_critical(int n_points, double tol);

/// z_critical for each N, rows in input order.
std::vector<CriticalResult> convergence_table(const std::vector<int>& n_list, double tol);

} // namespace ptwell
