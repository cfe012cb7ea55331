#pragma once

#include <complex>
#include <vector>

#include "ptwell/lattice.hpp"

namespace ptwell {

using Complex = std::complex<double>;

/// Characteristic polynomial p(F) = det(H - F*I), coefficients ascending.
/// Pseudo-Hermiticity forces the coefficients to be real up to round-off.
struct CharPoly {
  Eigen::VectorXcd coeffs; // length dim+1, leading coefficient (-1)^dim

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Horner evaluation.
  Complex eval(const Complex& w) const;

  /// sum_k |c_k| |w|^k, the scale against which |p(w)| is judged.
  double scale_at(const Complex& w) const;
};

CharPoly char_poly(const TridiagonalHamiltonian& h);

/// det(H - f*I) by the numeric three-term determinant recurrence. Unlike
/// Horner on the stored coefficients this stays accurate at large dim.
Complex char_value(const TridiagonalHamiltonian& h, const Complex& f);

/// All roots by simultaneous Weierstrass (Durand-Kerner) iteration on the
/// stored coefficients. Deterministic: initial guesses on a fixed circle
/// with angular offset 0.4 rad. Sorted by (re, im). `converged`, when given,
/// reports whether the correction norm fell below tol within max_iter.
/// Throws std::invalid_argument on zero leading coefficient or degree < 1.
std::vector<Complex> poly_roots(const CharPoly& p, double tol = 1e-12, int max_iter = 500,
                                bool* converged = nullptr);

struct SpectrumResult {
  int n_points = 0;
  double strength = 0.0;           // Z
  std::vector<Complex> roots;      // F values, sorted by (re, im)
  double reality_defect = 0.0;     // max |Im F|
  bool converged = true;
  std::vector<double> residuals;   // |p(root)| / scale, per root
};

/// char_poly -> Durand-Kerner -> one Newton polishing pass per root.
/// The iteration and the polish evaluate p through the determinant
/// recurrence; the monomial coefficients only fix the start circle and
/// the residual scale.
SpectrumResult full_spectrum(int n_points, double strength);

struct Eigenvector {
  Eigen::VectorXcd components; // (alpha_0..alpha_n, [gamma], alpha_n*..alpha_0*)
  double eigenvalue = 0.0;     // F
  bool at_coalescence = false; // F accepted only as a multiple root
};

/// Closed-form eigenvector alpha_k = U_k(z) alpha_0 with the phase of
/// alpha_0 fixed by the matching conditions (gamma real and positive when
/// nonzero), normalized to unit max-norm.
/// Throws std::domain_error when F is not an eigenvalue.
Eigenvector eigenvector(int n_points, double strength, double f);

/// ||H psi - F psi||_inf / ||psi||_inf.
/// Throws std::invalid_argument on dimension mismatch or zero vector.
double residual(const TridiagonalHamiltonian& h, const Complex& f,
                const Eigen::VectorXcd& psi);

} // namespace ptwell
