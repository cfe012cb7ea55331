#pragma once

#include <complex>
#include <utility>
#include <Eigen/Dense>

namespace ptwell {

/// Second-kind Chebyshev polynomial U_k(z) by the forward three-term
/// recurrence U_{k+1} = 2z U_k - U_{k-1}, U_0 = 1, U_1 = 2z.
/// Works for real and complex scalars alike.
template <class Scalar>
Scalar cheb_u(int k, const Scalar& z) {
  if (k == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar cur = Scalar(2) * z;
  for (int i = 1; i < k; ++i) {
    Scalar next = Scalar(2) * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// First-kind Chebyshev polynomial T_k(z), recurrence T_{k+1} = 2z T_k - T_{k-1}.
template <class Scalar>
Scalar cheb_t(int k, const Scalar& z) {
  if (k == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar cur = z;
  for (int i = 1; i < k; ++i) {
    Scalar next = Scalar(2) * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// The complex angle phi = alpha + i*beta of the mapping cos(phi) = (-F + i xi)/2.
struct ComplexAngle {
  double alpha = 0.0; // Re phi, in [0, pi]
  double beta = 0.0;  // Im phi, <= 0 for xi > 0
};

/// Invert the mapping at a real (F, xi) point. Branch: beta <= 0 for xi > 0,
/// beta >= 0 for xi < 0, beta = 0 on the real band xi = 0, |F| <= 2.
/// Throws std::domain_error when xi = 0 and |F| > 2 (outside the band).
ComplexAngle angle_from(double f, double xi);

/// Forward mapping: F = -2 cos(alpha) cosh(beta), xi = -2 sin(alpha) sinh(beta).
std::pair<double, double> point_from(const ComplexAngle& phi);

/// m-th power of X = [[-F, -xi], [xi, -F]] via the scaled-rotation closed form
/// X^m = rho^m [[cos m*a, -sin m*a], [sin m*a, cos m*a]] with
/// rho = sqrt(F^2 + xi^2), F = -rho cos a, xi = rho sin a.
Eigen::Matrix2d mat_power_rot(double f, double xi, int m);

/// U_k evaluated at the matrix argument X/2 by the same three-term recurrence.
Eigen::Matrix2d cheb_u_matrix(int k, double f, double xi);

} // namespace ptwell
