#include "ptwell/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace ptwell {

ComplexAngle angle_from(double f, double xi) {
  if (xi == 0.0 && std::abs(f) > 2.0) {
    throw std::domain_error("out-of-band: xi = 0 requires |F| <= 2");
  }
  // std::acos picks exactly the required branch: Re in [0, pi], and
  // Im(acos z) has the opposite sign of Im z.
  const std::complex<double> z(-f / 2.0, xi / 2.0);
  const std::complex<double> phi = std::acos(z);
  return ComplexAngle{phi.real(), phi.imag()};
}

std::pair<double, double> point_from(const ComplexAngle& phi) {
  const double f = -2.0 * std::cos(phi.alpha) * std::cosh(phi.beta);
  const double xi = -2.0 * std::sin(phi.alpha) * std::sinh(phi.beta);
  return {f, xi};
}

Eigen::Matrix2d mat_power_rot(double f, double xi, int m) {
  if (m < 0) throw std::invalid_argument("mat_power_rot: m must be >= 0");
  if (m == 0) return Eigen::Matrix2d::Identity();

  const double rho = std::hypot(f, xi);
  if (rho == 0.0) return Eigen::Matrix2d::Zero(); // X = 0, positive powers vanish

  const double angle = std::atan2(xi, -f); // F = -rho cos a, xi = rho sin a
  const double scale = std::pow(rho, m);
  const double c = std::cos(m * angle);
  const double s = std::sin(m * angle);
  Eigen::Matrix2d out;
  out << scale * c, -scale * s, scale * s, scale * c;
  return out;
}

Eigen::Matrix2d cheb_u_matrix(int k, double f, double xi) {
  if (k < 0) throw std::invalid_argument("cheb_u_matrix: k must be >= 0");
  Eigen::Matrix2d x;
  x << -f, -xi, xi, -f;

  // U_{k+1}(X/2) = X U_k(X/2) - U_{k-1}(X/2)
  Eigen::Matrix2d prev = Eigen::Matrix2d::Identity();
  if (k == 0) return prev;
  Eigen::Matrix2d cur = x;
  for (int i = 1; i < k; ++i) {
    Eigen::Matrix2d next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace ptwell
