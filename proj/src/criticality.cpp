#include "ptwell/criticality.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptwell/oracle.hpp"

namespace ptwell {

namespace {

constexpr double kDefectEps = 1e-7;   // |Im F| above this counts as complex
constexpr double kBracketCeiling = 16.0;
constexpr double kScanStep = 0.25;

double reality_defect(int n_points, double strength) {
  return full_spectrum(n_points, strength).reality_defect;
}

} // namespace

double z_critical_closed(int n_points) {
  switch (n_points) {
    case 3: return 9.0 / 4.0;
    case 4: return 4.0 * std::sqrt(2.0);
    case 5: return 25.0 * std::sqrt(5.0) / 16.0;
    case 6: return 9.0 / 2.0;
    default:
      throw std::invalid_argument("z_critical_closed: closed forms exist for N in {3,4,5,6}, got " +
                                  std::to_string(n_points));
  }
}

CriticalResult z_critical(int n_points, double tol) {
  if (n_points < 3) throw std::invalid_argument("z_critical: N must be >= 3");
  if (tol <= 0.0) throw std::invalid_argument("invalid-tolerance: tol must be > 0");

  if (reality_defect(n_points, 0.0) > kDefectEps) {
    throw std::logic_error("internal-consistency: spectrum not real at Z = 0");
  }

  // Coarse scan validates that the reality window is a single interval and
  // brackets the first transition.
  double lo = 0.0, hi = -1.0;
  bool transitioned = false;
  bool multi = false;
  for (double z = kScanStep; z <= kBracketCeiling + 1e-12; z += kScanStep) {
    const bool complex_here = reality_defect(n_points, z) > kDefectEps;
    if (!transitioned && complex_here) {
      lo = z - kScanStep;
      hi = z;
      transitioned = true;
    } else if (transitioned && !complex_here) {
      multi = true;
    }
  }
  if (!transitioned) {
    throw std::runtime_error("no-transition-found: spectrum stays real up to Z = 16");
  }

  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (reality_defect(n_points, mid) > kDefectEps) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }

  CriticalResult result;
  result.n_points = n_points;
  result.z_crit = 0.5 * (lo + hi);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.iterations = iterations;
  result.method = CriticalMethod::bisect;
  result.multi_transition = multi;

  if (n_points >= 3 && n_points <= 6) {
    const double closed = z_critical_closed(n_points);
    if (std::abs(result.z_crit - closed) > 10.0 * tol + 1e-9) {
      throw std::logic_error("internal-consistency: bisection disagrees with the closed form at N = " +
                             std::to_string(n_points));
    }
  }
  return result;
}

std::vector<CriticalResult> convergence_table(const std::vector<int>& n_list, double tol) {
  std::vector<CriticalResult> rows;
  rows.reserve(n_list.size());
  for (int n_points : n_list) rows.push_back(z_critical(n_points, tol));
  return rows;
}

} // namespace ptwell
