#pragma once

#include <complex>
#include <Eigen/Dense>

namespace ptwell {

enum class Parity { even, odd };

/// Geometry of the N-point lattice on [-1, 1] with Dirichlet endpoints.
/// Interior sites x_k = -1 + k*h, k = 1..N-1, h = 2/N.
struct LatticeSpec {
  int n_points = 0;     // N
  double spacing = 0.0; // h = 2/N
  Parity parity = Parity::even;
  int half_size = 0;    // n, with N = 2n+4 (even) or N = 2n+3 (odd)
  int dim = 0;          // N-1, matrix dimension
};

/// Non-Hermiticity strength in physical and rescaled units.
struct CouplingSpec {
  double strength = 0.0; // Z
  double rescaled = 0.0; // xi = Z*h^2
};

enum class UnitConversion { z_to_xi, xi_to_z, e_to_f, f_to_e };

/// Complex tridiagonal matrix in the shifted convention: the eigenvalue is
/// F = E*h^2 - 2 and both off-diagonals are fixed at -1 (not stored).
struct TridiagonalHamiltonian {
  Eigen::VectorXcd diag;

  int dim() const { return static_cast<int>(diag.size()); }

  /// Materialize the full matrix (tests and residual fixtures).
  Eigen::MatrixXcd dense() const;
};

/// Real glued form for even N: (B - F*I)c = 0 with c ordered
/// (a_0, b_0, ..., a_n, b_n, gamma).
struct RealBlockHamiltonian {
  Eigen::MatrixXd matrix; // B, dimension 2n+3
};

LatticeSpec make_lattice(int n_points);

CouplingSpec make_coupling(const LatticeSpec& spec, double strength);

double convert_units(const LatticeSpec& spec, double value, UnitConversion direction);

TridiagonalHamiltonian build_hamiltonian(const LatticeSpec& spec, const CouplingSpec& coupling);

RealBlockHamiltonian build_real_block(const LatticeSpec& spec, const CouplingSpec& coupling);

/// Max-norm of (P H P - H^dagger) with P the antidiagonal exchange matrix.
/// Zero for any correctly built Hamiltonian.
double pseudo_hermiticity_defect(const TridiagonalHamiltonian& h);

} // namespace ptwell
