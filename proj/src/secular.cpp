#include "ptwell/secular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "ptwell/lattice.hpp"

namespace ptwell {

namespace {

using Complex = std::complex<double>;

constexpr double kScanGuard = 1e-9;       // delta beyond [-2, 2]
constexpr int kSamplesPerDim = 32;        // scan grid density
constexpr double kMergeThreshold = 1e-10; // |g| < threshold * max|g| flags a pair
constexpr double kDipPrefilter = 1e-3;    // local minima worth refining

} // namespace

double secular_even(double f, double xi, int n) {
  if (n < 0) throw std::invalid_argument("secular_even: n must be >= 0");
  const Complex z(-f / 2.0, xi / 2.0);
  const Complex zc = std::conj(z);
  return 2.0 * (cheb_t(n + 2, z) * cheb_u(n + 1, zc)).real();
}

double secular_odd(double f, double xi, int n) {
  if (n < 0) throw std::invalid_argument("secular_odd: n must be >= 0");
  const Complex z(-f / 2.0, xi / 2.0);
  const Complex zc = std::conj(z);
  const Complex up = cheb_u(n + 1, z);
  const Complex um = cheb_u(n, z);
  return (up * cheb_u(n + 1, zc) - um * cheb_u(n, zc)).real();
}

double secular_trig(const ComplexAngle& phi, int n_points) {
  if (n_points < 4 || n_points % 2 != 0) {
    throw std::invalid_argument("secular_trig: requires even N >= 4");
  }
  const Complex p(phi.alpha, phi.beta);
  const Complex s = std::sin(p);
  if (std::abs(s) == 0.0) {
    throw std::domain_error("singular-angle: sin(phi) = 0");
  }
  const int m = n_points / 2;
  const Complex mp = double(m) * p;
  return (std::sin(mp) * std::cos(std::conj(mp)) / s).real();
}

namespace {

double bisect_root(const std::function<double(double)>& g, double lo, double hi,
                   double g_lo, double tol) {
  // g(lo) and g(hi) have opposite signs on entry.
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mid == 0.0) mid = lo + 0.25 * (hi - lo); // scan functions may divide by F
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_lo < 0) != (g_mid < 0)) {
      hi = mid;
    } else {
      lo = mid;
      g_lo = g_mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimizer of |g| on [lo, hi].
double minimize_abs(const std::function<double(double)>& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = std::abs(g(c)), gd = std::abs(g(d));
  for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a)); ++it) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = std::abs(g(c));
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = std::abs(g(d));
    }
  }
  return 0.5 * (a + b);
}

} // namespace

std::vector<RealRoot> real_spectrum(int n_points, double strength, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("invalid-tolerance: tol must be > 0");
  const LatticeSpec spec = make_lattice(n_points);
  const CouplingSpec coupling = make_coupling(spec, strength);
  const double xi = coupling.rescaled;
  const int n = spec.half_size;
  const bool even = spec.parity == Parity::even;

  // For even N the guaranteed F = 0 root is divided out so the scan sees the
  // remaining factor; the grid has an even point count, so F = 0 is never
  // sampled exactly.
  std::function<double(double)> g;
  if (even) {
    g = [xi, n](double f) { return secular_even(f, xi, n) / f; };
  } else {
    g = [xi, n](double f) { return secular_odd(f, xi, n); };
  }

  const double lo = -2.0 - kScanGuard;
  const double hi = 2.0 + kScanGuard;
  const int n_samples = kSamplesPerDim * spec.dim;
  const double step = (hi - lo) / (n_samples - 1);

  std::vector<double> fs(n_samples), vs(n_samples);
  double max_abs = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    fs[i] = lo + i * step;
    vs[i] = g(fs[i]);
    max_abs = std::max(max_abs, std::abs(vs[i]));
  }

  std::vector<RealRoot> roots;
  std::vector<bool> cell_has_root(n_samples, false);
  for (int i = 0; i + 1 < n_samples; ++i) {
    if (vs[i] == 0.0) {
      roots.push_back({fs[i], 1});
      cell_has_root[i] = true;
    } else if ((vs[i] < 0) != (vs[i + 1] < 0)) {
      roots.push_back({bisect_root(g, fs[i], fs[i + 1], vs[i], tol), 1});
      cell_has_root[i] = true;
    }
  }
  if (vs[n_samples - 1] == 0.0) roots.push_back({fs[n_samples - 1], 1});

  // Near-degenerate pairs: a local |g| minimum with no sign change that
  // refines below the merge threshold counts twice.
  for (int i = 1; i + 1 < n_samples; ++i) {
    if (cell_has_root[i - 1] || cell_has_root[i]) continue;
    const double a = std::abs(vs[i - 1]), b = std::abs(vs[i]), c = std::abs(vs[i + 1]);
    if (b > a || b > c) continue;
    if (b > kDipPrefilter * max_abs) continue;
    const double f_star = minimize_abs(g, fs[i - 1], fs[i + 1]);
    if (std::abs(g(f_star)) < kMergeThreshold * max_abs) {
      roots.push_back({f_star, 2});
      cell_has_root[i - 1] = cell_has_root[i] = true;
    }
  }

  if (even) roots.push_back({0.0, 1});

  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.f < b.f; });
  return roots;
}

} // namespace ptwell
