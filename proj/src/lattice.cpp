#include "ptwell/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptwell {

using namespace std::complex_literals;

LatticeSpec make_lattice(int n_points) {
  if (n_points < 3) {
    throw std::invalid_argument("invalid-lattice: N must be >= 3, got " +
                                std::to_string(n_points));
  }
  LatticeSpec spec;
  spec.n_points = n_points;
  spec.spacing = 2.0 / n_points;
  spec.parity = (n_points % 2 == 0) ? Parity::even : Parity::odd;
  spec.half_size = (spec.parity == Parity::even) ? (n_points - 4) / 2 : (n_points - 3) / 2;
  spec.dim = n_points - 1;
  return spec;
}

CouplingSpec make_coupling(const LatticeSpec& spec, double strength) {
  return CouplingSpec{strength, strength * spec.spacing * spec.spacing};
}

double convert_units(const LatticeSpec& spec, double value, UnitConversion direction) {
  const double h2 = spec.spacing * spec.spacing;
  switch (direction) {
    case UnitConversion::z_to_xi: return value * h2;
    case UnitConversion::xi_to_z: return value / h2;
    case UnitConversion::e_to_f: return value * h2 - 2.0;
    case UnitConversion::f_to_e: return (value + 2.0) / h2;
  }
  throw std::invalid_argument("convert_units: unknown direction");
}

TridiagonalHamiltonian build_hamiltonian(const LatticeSpec& spec, const CouplingSpec& coupling) {
  const int dim = spec.dim;
  const int n = spec.half_size;
  const double xi = coupling.rescaled;

  TridiagonalHamiltonian h;
  h.diag = Eigen::VectorXcd::Zero(dim);
  // n+1 sites on each side of the origin; even N has a central site at x = 0.
  for (int k = 0; k <= n; ++k) {
    h.diag[k] = 1i * xi;
    h.diag[dim - 1 - k] = -1i * xi;
  }
  return h;
}

Eigen::MatrixXcd TridiagonalHamiltonian::dense() const {
  const int d = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = diag[i];
    if (i + 1 < d) {
      m(i, i + 1) = -1.0;
      m(i + 1, i) = -1.0;
    }
  }
  return m;
}

RealBlockHamiltonian build_real_block(const LatticeSpec& spec, const CouplingSpec& coupling) {
  if (spec.parity != Parity::even) {
    throw std::invalid_argument("unsupported-parity: the real glued form exists for even N only");
  }
  const int n = spec.half_size;
  const int dim = 2 * n + 3;
  const double xi = coupling.rescaled;

  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k <= n; ++k) {
    const int i = 2 * k;
    b(i, i + 1) = -xi;
    b(i + 1, i) = xi;
    if (k < n) {
      b(i, i + 2) = -1.0;
      b(i + 1, i + 3) = -1.0;
      b(i + 2, i) = -1.0;
      b(i + 3, i + 1) = -1.0;
    }
  }
  b(2 * n, dim - 1) = -1.0;  // a_n row, gamma column
  b(dim - 1, 2 * n) = -2.0;  // gamma row, a_n column
  return RealBlockHamiltonian{std::move(b)};
}

double pseudo_hermiticity_defect(const TridiagonalHamiltonian& h) {
  // P H P reverses the diagonal; the constant off-diagonals are P-invariant,
  // so the defect lives on the diagonal alone.
  const int d = h.dim();
  double defect = 0.0;
  for (int i = 0; i < d; ++i) {
    defect = std::max(defect, std::abs(h.diag[d - 1 - i] - std::conj(h.diag[i])));
  }
  return defect;
}

} // namespace ptwell
