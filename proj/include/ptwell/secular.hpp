#pragma once

#include <vector>

#include "ptwell/chebyshev.hpp"

namespace ptwell {

/// Secular function for even N = 2n+4:
///   g(F) = 2 Re[ T_{n+2}(z) U_{n+1}(conj z) ],  z = (-F + i xi)/2.
/// A real polynomial in F of degree 2n+3, identical to det(H - F*I).
double secular_even(double f, double xi, int n);

/// Secular function for odd N = 2n+3:
///   g(F) = |U_{n+1}(z)|^2 - |U_n(z)|^2,  z = (-F + i xi)/2.
/// A real polynomial in F of degree 2n+2, identical to det(H - F*I).
double secular_odd(double f, double xi, int n);

/// Trigonometric form for even N, with multiplier m = N/2:
///   Re[ sin(m phi) cos(m conj(phi)) / sin(phi) ].
/// Equals secular_even / 2 at the (F, xi) image of phi.
/// Throws std::domain_error when sin(phi) = 0.
double secular_trig(const ComplexAngle& phi, int n_points);

struct RealRoot {
  double f = 0.0;
  int multiplicity = 1; // 2 marks a flagged near-degenerate pair
};

/// All real F-roots of the parity-appropriate secular function in
/// [-2-delta, 2+delta], localized to |dF| <= tol by bisection after a
/// sign-change scan. For even N the F = 0 robust level is inserted
/// analytically. Near-degenerate pairs (a deep local |g| minimum with no
/// sign change) are reported once with multiplicity 2. Sorted ascending.
std::vector<RealRoot> real_spectrum(int n_points, double strength, double tol);

} // namespace ptwell
