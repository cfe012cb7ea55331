#include "ptwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ptwell/chebyshev.hpp"

namespace ptwell {

namespace {

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

} // namespace

Complex CharPoly::eval(const Complex& w) const {
  Complex v = 0.0;
  for (int k = degree(); k >= 0; --k) v = v * w + coeffs[k];
  return v;
}

double CharPoly::scale_at(const Complex& w) const {
  const double aw = std::abs(w);
  double s = 0.0;
  for (int k = degree(); k >= 0; --k) s = s * aw + std::abs(coeffs[k]);
  return s;
}

CharPoly char_poly(const TridiagonalHamiltonian& h) {
  const int dim = h.dim();
  if (dim < 1) throw std::invalid_argument("char_poly: dim must be >= 1");

  // D_k = (d_k - F) D_{k-1} - D_{k-2}, carried on coefficient sequences.
  Eigen::VectorXcd prev = Eigen::VectorXcd::Zero(dim + 1); // D_0 = 1
  prev[0] = 1.0;
  Eigen::VectorXcd cur = Eigen::VectorXcd::Zero(dim + 1);  // D_1
  cur[0] = h.diag[0];
  cur[1] = -1.0;
  for (int k = 1; k < dim; ++k) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim + 1);
    for (int j = 0; j <= k; ++j) next[j] = h.diag[k] * cur[j] - prev[j];
    for (int j = 0; j <= k; ++j) next[j + 1] -= cur[j];
    prev.swap(cur);
    cur.swap(next);
  }
  return CharPoly{std::move(cur)};
}

Complex char_value(const TridiagonalHamiltonian& h, const Complex& f) {
  const int dim = h.dim();
  Complex prev = 1.0;
  Complex cur = h.diag[0] - f;
  for (int k = 1; k < dim; ++k) {
    const Complex next = (h.diag[k] - f) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// det(H - fI) together with its F-derivative, same recurrence.
std::pair<Complex, Complex> char_value_deriv(const TridiagonalHamiltonian& h, const Complex& f) {
  const int dim = h.dim();
  Complex prev = 1.0, dprev = 0.0;
  Complex cur = h.diag[0] - f, dcur = -1.0;
  for (int k = 1; k < dim; ++k) {
    const Complex next = (h.diag[k] - f) * cur - prev;
    const Complex dnext = -cur + (h.diag[k] - f) * dcur - dprev;
    prev = cur;
    dprev = dcur;
    cur = next;
    dcur = dnext;
  }
  return {cur, dcur};
}

// Root radius: Cauchy bound capped by the Fujiwara bound. The plain Cauchy
// bound is of order max|c_k|, which for these Chebyshev-type coefficients
// grows like 2^degree and overflows the distance products at large dim.
double start_radius(const CharPoly& p) {
  const int deg = p.degree();
  const double lead = std::abs(p.coeffs[deg]);
  double cauchy = 0.0;
  double fujiwara = 0.0;
  for (int k = 1; k <= deg; ++k) {
    const double r = std::abs(p.coeffs[deg - k]) / lead;
    cauchy = std::max(cauchy, r);
    fujiwara = std::max(fujiwara, std::pow(r, 1.0 / k));
  }
  return std::min(1.0 + cauchy, 2.0 * fujiwara);
}

struct WeierstrassOutcome {
  std::vector<Complex> roots;
  int iterations = 0;
  bool converged = false;
};

// Simultaneous Weierstrass iteration, Gauss-Seidel sweeps, deterministic
// start circle with angular offset 0.4 rad.
WeierstrassOutcome weierstrass_solve(int degree, const Complex& lead, double radius,
                                     const std::function<Complex(const Complex&)>& p,
                                     double tol, int max_iter) {
  WeierstrassOutcome out;
  out.roots.resize(degree);
  for (int i = 0; i < degree; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / degree + 0.4;
    out.roots[i] = radius * Complex(std::cos(angle), std::sin(angle));
  }
  for (int it = 0; it < max_iter; ++it) {
    double max_correction = 0.0;
    for (int i = 0; i < degree; ++i) {
      Complex denom = lead;
      for (int j = 0; j < degree; ++j) {
        if (j == i) continue;
        Complex diff = out.roots[i] - out.roots[j];
        if (diff == 0.0) diff = Complex(1e-12 * (1.0 + std::abs(out.roots[i])), 0.0);
        denom *= diff;
      }
      const Complex correction = p(out.roots[i]) / denom;
      out.roots[i] -= correction;
      max_correction = std::max(max_correction, std::abs(correction));
    }
    out.iterations = it + 1;
    if (max_correction <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

} // namespace

std::vector<Complex> poly_roots(const CharPoly& p, double tol, int max_iter, bool* converged) {
  const int deg = p.degree();
  if (deg < 1 || std::abs(p.coeffs[deg]) == 0.0) {
    throw std::invalid_argument("malformed-polynomial: needs degree >= 1 and nonzero leading coefficient");
  }
  if (tol <= 0.0) throw std::invalid_argument("invalid-tolerance: tol must be > 0");

  auto outcome = weierstrass_solve(
      deg, p.coeffs[deg], start_radius(p),
      [&p](const Complex& w) { return p.eval(w); }, tol, max_iter);
  std::sort(outcome.roots.begin(), outcome.roots.end(), complex_less);
  if (converged != nullptr) *converged = outcome.converged;
  return outcome.roots;
}

SpectrumResult full_spectrum(int n_points, double strength) {
  const LatticeSpec spec = make_lattice(n_points);
  const TridiagonalHamiltonian h = build_hamiltonian(spec, make_coupling(spec, strength));
  const CharPoly p = char_poly(h);
  const int deg = p.degree();

  // Same Weierstrass iteration as poly_roots, but with p evaluated through
  // the determinant recurrence: Horner on the stored coefficients loses the
  // edge roots beyond dim ~ 30 (monomial-basis conditioning), the recurrence
  // does not.
  auto outcome = weierstrass_solve(
      deg, p.coeffs[deg], start_radius(p),
      [&h](const Complex& w) { return char_value(h, w); }, 1e-12, 500);

  // One Newton polishing pass per root.
  for (Complex& root : outcome.roots) {
    Complex best = root;
    double best_abs = std::abs(char_value(h, root));
    Complex w = root;
    for (int it = 0; it < 20; ++it) {
      const auto [v, dv] = char_value_deriv(h, w);
      if (dv == 0.0) break;
      const Complex step = v / dv;
      w -= step;
      const double aw = std::abs(char_value(h, w));
      if (aw < best_abs) {
        best_abs = aw;
        best = w;
      }
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    root = best;
  }

  // Real coefficients make p real-valued on the real axis; a root whose
  // imaginary part is pure round-off is re-polished there and stored with
  // im = 0 exactly. Roots near the reality threshold are left untouched.
  for (Complex& root : outcome.roots) {
    const double im = std::abs(root.imag());
    if (im == 0.0 || im > 1e-10 * (1.0 + std::abs(root.real()))) continue;
    double x = root.real();
    bool ok = true;
    for (int it = 0; it < 20; ++it) {
      const auto [v, dv] = char_value_deriv(h, Complex(x, 0.0));
      if (dv.real() == 0.0) {
        ok = false;
        break;
      }
      const double step = v.real() / dv.real();
      x -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    if (ok && std::abs(x - root.real()) <= std::max(4.0 * im, 1e-12 * (1.0 + std::abs(x)))) {
      root = Complex(x, 0.0);
    }
  }

  // The remaining complex roots come in conjugate pairs; store each pair
  // exactly conjugate, and drop a pure round-off real part (a genuinely
  // imaginary pair, as for N = 4 above the transition).
  {
    auto& roots = outcome.roots;
    const int count = static_cast<int>(roots.size());
    std::vector<bool> used(count, false);
    for (int i = 0; i < count; ++i) {
      if (used[i] || roots[i].imag() == 0.0) continue;
      int partner = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < count; ++j) {
        if (j == i || used[j] || roots[j].imag() == 0.0) continue;
        const double dist = std::abs(std::conj(roots[i]) - roots[j]);
        if (dist < best) {
          best = dist;
          partner = j;
        }
      }
      if (partner < 0 || best > 1e-6 * (1.0 + std::abs(roots[i]))) continue;
      used[i] = used[partner] = true;
      Complex c = 0.5 * (roots[i] + std::conj(roots[partner]));
      if (std::abs(c.real()) <= 1e-10 * (1.0 + std::abs(c.imag()))) {
        c = Complex(0.0, c.imag());
      }
      roots[i] = c;
      roots[partner] = std::conj(c);
    }
  }
  std::sort(outcome.roots.begin(), outcome.roots.end(), complex_less);

  SpectrumResult result;
  result.n_points = n_points;
  result.strength = strength;
  result.roots = std::move(outcome.roots);
  result.converged = outcome.converged;
  result.reality_defect = 0.0;
  result.residuals.reserve(deg);
  for (const Complex& root : result.roots) {
    result.reality_defect = std::max(result.reality_defect, std::abs(root.imag()));
    result.residuals.push_back(std::abs(char_value(h, root)) / std::max(1.0, p.scale_at(root)));
  }
  return result;
}

Eigenvector eigenvector(int n_points, double strength, double f) {
  const LatticeSpec spec = make_lattice(n_points);
  const CouplingSpec coupling = make_coupling(spec, strength);
  const TridiagonalHamiltonian h = build_hamiltonian(spec, coupling);
  const int n = spec.half_size;
  const double xi = coupling.rescaled;

  // Accept F if it is within Newton distance 1e-7 of a root; fall back to
  // the second-order distance estimate at a multiple root.
  const auto [pv, dpv] = char_value_deriv(h, Complex(f, 0.0));
  bool accepted = false;
  bool coalesced = false;
  if (dpv != 0.0 && std::abs(pv / dpv) <= 1e-7) {
    accepted = true;
  } else {
    // p'' by central difference of p'; only the scale matters here.
    const double step = 1e-6;
    const Complex dpl = char_value_deriv(h, Complex(f - step, 0.0)).second;
    const Complex dpr = char_value_deriv(h, Complex(f + step, 0.0)).second;
    const Complex ddp = (dpr - dpl) / (2.0 * step);
    if (ddp != 0.0 && std::sqrt(std::abs(2.0 * pv / ddp)) <= 1e-7) {
      accepted = true;
      coalesced = true;
    }
  }
  if (!accepted) {
    throw std::domain_error("not-an-eigenvalue: char poly does not vanish near F");
  }

  const Complex z(-f / 2.0, xi / 2.0);
  std::vector<Complex> u(n + 2);
  for (int k = 0; k <= n + 1; ++k) u[k] = cheb_u(k, z);

  Complex alpha0;
  const bool even = spec.parity == Parity::even;
  if (even) {
    const Complex t = u[n + 1]; // gamma = U_{n+1}(z) alpha_0, must come out real
    if (std::abs(t) > 1e-11 * (1.0 + std::abs(u[n]))) {
      alpha0 = std::conj(t) / std::abs(t); // gamma = |t| > 0
    } else {
      // gamma = 0 level: the remaining matching condition is Re[U_n alpha_0] = 0.
      const Complex s = u[n];
      alpha0 = Complex(0.0, 1.0) * std::conj(s) / std::abs(s);
    }
  } else {
    // U_{n+1}(z) alpha_0 = conj(U_n(z) alpha_0); consecutive U_k never vanish
    // together, so the quotient is well defined at any eigenvalue.
    const Complex ratio = std::conj(u[n]) / u[n + 1];
    alpha0 = std::isfinite(std::abs(ratio)) ? std::polar(1.0, 0.5 * std::arg(ratio))
                                            : Complex(1.0, 0.0);
  }

  Eigenvector out;
  out.eigenvalue = f;
  out.at_coalescence = coalesced;
  out.components = Eigen::VectorXcd::Zero(spec.dim);
  for (int k = 0; k <= n; ++k) {
    const Complex ak = u[k] * alpha0;
    out.components[k] = ak;
    out.components[spec.dim - 1 - k] = std::conj(ak);
  }
  if (even) out.components[n + 1] = (u[n + 1] * alpha0).real();

  const double norm = out.components.cwiseAbs().maxCoeff();
  out.components /= norm;
  return out;
}

double residual(const TridiagonalHamiltonian& h, const Complex& f, const Eigen::VectorXcd& psi) {
  const int dim = h.dim();
  if (static_cast<int>(psi.size()) != dim) {
    throw std::invalid_argument("residual: dimension mismatch");
  }
  const double norm = psi.cwiseAbs().maxCoeff();
  if (norm == 0.0) throw std::invalid_argument("residual: zero vector");

  double worst = 0.0;
  for (int k = 0; k < dim; ++k) {
    Complex r = (h.diag[k] - f) * psi[k];
    if (k > 0) r -= psi[k - 1];
    if (k + 1 < dim) r -= psi[k + 1];
    worst = std::max(worst, std::abs(r));
  }
  return worst / norm;
}

} // namespace ptwell
