// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ptwell/chebyshev.hpp"
#include "ptwell/criticality.hpp"
#include "ptwell/lattice.hpp"
#include "ptwell/oracle.hpp"
#include "ptwell/secular.hpp"
#include "test_util.hpp"

using namespace ptwell;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::vector<Complex> sorted_complex(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

std::vector<double> flatten_real_roots(const std::vector<RealRoot>& roots) {
  std::vector<double> out;
  for (const auto& r : roots) {
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.f);
  }
  return out;
}

// max |a_i - b_i| over sorted multisets; infinity on size mismatch
double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

void criterion_1() {
  double worst = 0.0;
  for (int n : {3, 4, 5, 6}) {
    const auto result = z_critical(n, 1e-8);
    worst = std::max(worst, std::abs(result.z_crit - z_critical_closed(n)));
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |dZ| = %.3e", worst);
  report(1, "closed-form critical couplings by bisection", worst <= 1e-6, detail);
}

void criterion_2() {
  const std::vector<std::pair<int, double>> expected = {
      {7, 3.946}, {8, 4.463}, {9, 4.148}, {10, 4.461}, {12, 4.463}};
  double worst = 0.0;
  for (const auto& [n, z] : expected) {
    worst = std::max(worst, std::abs(z_critical(n, 1e-6).z_crit - z));
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |dZ| = %.3e", worst);
  report(2, "numerical critical couplings at N = 7..12", worst <= 2e-3, detail);
}

void criterion_3() {
  bool pass = true;
  std::string values;
  for (int n : {20, 40, 60, 100}) {
    const double z = z_critical(n, 1e-4).z_crit;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f ", z);
    values += buf;
    pass = pass && z > 4.40 && z < 4.50;
  }
  report(3, "large-N trend stays in (4.40, 4.50)", pass, values);
}

void criterion_4() {
  double worst = 0.0;
  for (double xi : {0.0, 0.2, 0.4}) {
    {
      const double z = convert_units(make_lattice(4), xi, UnitConversion::xi_to_z);
      std::vector<double> expected = {0.0, std::sqrt(2.0 - xi * xi), -std::sqrt(2.0 - xi * xi)};
      worst = std::max(worst, multiset_distance(flatten_real_roots(real_spectrum(4, z, 1e-12)),
                                                expected));
    }
    {
      const double z = convert_units(make_lattice(6), xi, UnitConversion::xi_to_z);
      std::vector<double> expected = {0.0};
      for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
          expected.push_back(s1 * std::sqrt(2.0 - xi * xi + s2 * std::sqrt(1.0 - 4.0 * xi * xi)));
        }
      }
      worst = std::max(worst, multiset_distance(flatten_real_roots(real_spectrum(6, z, 1e-12)),
                                                expected));
    }
    {
      const double z = convert_units(make_lattice(3), xi, UnitConversion::xi_to_z);
      std::vector<double> expected = {std::sqrt(1.0 - xi * xi), -std::sqrt(1.0 - xi * xi)};
      worst = std::max(worst, multiset_distance(flatten_real_roots(real_spectrum(3, z, 1e-12)),
                                                expected));
    }
    {
      const double z = convert_units(make_lattice(5), xi, UnitConversion::xi_to_z);
      std::vector<double> expected;
      for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
          expected.push_back(
              s1 * 0.5 * std::sqrt(6.0 - 4.0 * xi * xi + s2 * 2.0 * std::sqrt(5.0 - 16.0 * xi * xi)));
        }
      }
      worst = std::max(worst, multiset_distance(flatten_real_roots(real_spectrum(5, z, 1e-12)),
                                                expected));
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |dF| = %.3e", worst);
  report(4, "closed-form spectra at N = 3..6", worst <= 1e-10, detail);
}

void criterion_5() {
  double worst = 0.0;
  for (int n_points = 3; n_points <= 40; ++n_points) {
    std::vector<double> expected;
    for (int k = 1; k < n_points; ++k) {
      expected.push_back(-2.0 * std::cos(k * std::numbers::pi / n_points));
    }
    worst = std::max(worst, multiset_distance(
                                flatten_real_roots(real_spectrum(n_points, 0.0, 1e-12)), expected));
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |dF| = %.3e", worst);
  report(5, "Hueckel limit at Z = 0, N = 3..40", worst <= 1e-10, detail);
}

void criterion_6() {
  double worst_c0 = 0.0;
  bool zero_present = true;
  for (int n_points = 4; n_points <= 40; n_points += 2) {
    const auto spec = make_lattice(n_points);
    for (double z : {1.0, 10.0, 100.0}) {
      const auto p = char_poly(build_hamiltonian(spec, make_coupling(spec, z)));
      const double scale = p.coeffs.cwiseAbs().maxCoeff();
      worst_c0 = std::max(worst_c0, std::abs(p.coeffs[0]) / scale);

      bool found = false;
      for (const auto& root : real_spectrum(n_points, z, 1e-12)) {
        if (root.f == 0.0) found = true;
      }
      zero_present = zero_present && found;
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |c0|/max|c| = %.3e", worst_c0);
  report(6, "robust F = 0 level for even N", worst_c0 <= 1e-10 && zero_present, detail);
}

void criterion_7() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> fdist(-2.5, 2.5);
  std::uniform_real_distribution<double> xdist(-2.0, 2.0);
  double worst = 0.0;
  for (int n_points = 3; n_points <= 20; ++n_points) {
    const auto spec = make_lattice(n_points);
    for (int trial = 0; trial < 200; ++trial) {
      const double f = fdist(rng);
      const double xi = xdist(rng);
      const auto h = build_hamiltonian(
          spec, CouplingSpec{convert_units(spec, xi, UnitConversion::xi_to_z), xi});
      const double det = char_value(h, Complex(f, 0.0)).real();
      const double sec = (spec.parity == Parity::even) ? secular_even(f, xi, spec.half_size)
                                                       : secular_odd(f, xi, spec.half_size);
      worst = std::max(worst, std::abs(sec - det) / std::max(1.0, std::abs(det)));
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max rel dev = %.3e", worst);
  report(7, "secular functions equal the determinant", worst <= 1e-9, detail);
}

void criterion_8() {
  double worst = 0.0;
  for (int n_points : {5, 16, 33, 64}) {
    const double z_crit = z_critical(n_points, 1e-6).z_crit;
    for (double z : {0.0, 1.0, 2.0, 0.9 * z_crit}) {
      const auto secular_roots = flatten_real_roots(real_spectrum(n_points, z, 1e-12));
      std::vector<double> oracle_roots;
      for (const Complex& f : full_spectrum(n_points, z).roots) {
        if (std::abs(f.imag()) <= 1e-9) oracle_roots.push_back(f.real());
      }
      worst = std::max(worst, multiset_distance(secular_roots, oracle_roots));
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max |dF| = %.3e", worst);
  report(8, "oracle and secular spectra agree at N up to 64", worst <= 1e-8, detail);
}

void criterion_9() {
  std::mt19937 rng(4096);
  std::uniform_int_distribution<int> ndist(3, 40);
  std::uniform_real_distribution<double> zdist(-8.0, 8.0);

  double worst_negation = 0.0, worst_conj = 0.0, worst_residual = 0.0;
  double worst_eq22 = 0.0, worst_block = 0.0, worst_defect = 0.0;

  for (int trial = 0; trial < 50; ++trial) {
    const int n_points = ndist(rng);
    const double z = zdist(rng);
    const auto spec = make_lattice(n_points);
    const auto coupling = make_coupling(spec, z);
    const auto h = build_hamiltonian(spec, coupling);
    const double xi = coupling.rescaled;

    worst_defect = std::max(worst_defect, pseudo_hermiticity_defect(h));

    const auto result = full_spectrum(n_points, z);
    std::vector<Complex> conj, neg;
    for (const Complex& f : result.roots) {
      conj.push_back(std::conj(f));
      neg.push_back(-f);
    }
    const auto sc = sorted_complex(conj);
    const auto sn = sorted_complex(neg);
    for (size_t i = 0; i < result.roots.size(); ++i) {
      worst_conj = std::max(worst_conj, std::abs(sc[i] - result.roots[i]));
      worst_negation = std::max(worst_negation, std::abs(sn[i] - result.roots[i]));
    }

    for (const Complex& root : result.roots) {
      if (std::abs(root.imag()) > 1e-9) continue;
      const double f = root.real();
      const auto vec = eigenvector(n_points, z, f);
      worst_residual = std::max(worst_residual, residual(h, Complex(f, 0.0), vec.components));

      const Complex zz(-f / 2.0, xi / 2.0);
      const Complex alpha0 = vec.components[0];
      const Eigen::Vector2d c0(alpha0.real(), alpha0.imag());
      for (int k = 0; k <= spec.half_size + 1; ++k) {
        const Eigen::Vector2d ck = cheb_u_matrix(k, f, xi) * c0;
        const Complex alpha_k = cheb_u(k, zz) * alpha0;
        worst_eq22 = std::max(worst_eq22, std::hypot(ck[0] - alpha_k.real(), ck[1] - alpha_k.imag()));
      }
    }

    if (spec.parity == Parity::even) {
      const auto block = build_real_block(spec, coupling);
      Eigen::EigenSolver<Eigen::MatrixXd> solver(block.matrix);
      std::vector<Complex> block_roots(spec.dim);
      for (int i = 0; i < spec.dim; ++i) block_roots[i] = solver.eigenvalues()[i];
      worst_block = std::max(
          worst_block, ptwell_test::complex_multiset_distance(block_roots, result.roots));
    }
  }

  const bool pass = worst_defect == 0.0 && worst_negation <= 1e-9 && worst_conj <= 1e-9 &&
                    worst_residual <= 1e-9 && worst_eq22 <= 1e-10 && worst_block <= 1e-8;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "defect=%.1e negation=%.1e conj=%.1e residual=%.1e eq22=%.1e block=%.1e",
                worst_defect, worst_negation, worst_conj, worst_residual, worst_eq22, worst_block);
  report(9, "structural invariants at 50 random points", pass, detail);
}

void criterion_10() {
  std::mt19937 rng(515);
  std::uniform_real_distribution<double> fdist(-3.0, 3.0);
  std::uniform_real_distribution<double> xdist(-4.0, 4.0);
  double worst_rt = 0.0;
  int samples = 0;
  while (samples < 1000) {
    const double f = fdist(rng);
    const double xi = xdist(rng);
    if (xi == 0.0) continue;
    ++samples;
    const auto [f2, xi2] = point_from(angle_from(f, xi));
    worst_rt = std::max(worst_rt, std::max(std::abs(f2 - f), std::abs(xi2 - xi)));
  }

  // trig zero set at the even-N closed-form roots of criterion 4
  double worst_trig = 0.0;
  for (double xi : {0.0, 0.2, 0.4}) {
    const std::vector<double> n4_roots = {0.0, std::sqrt(2.0 - xi * xi), -std::sqrt(2.0 - xi * xi)};
    for (double f : n4_roots) {
      worst_trig = std::max(worst_trig, std::abs(secular_trig(angle_from(f, xi), 4)));
    }
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        const double f = s1 * std::sqrt(2.0 - xi * xi + s2 * std::sqrt(1.0 - 4.0 * xi * xi));
        worst_trig = std::max(worst_trig, std::abs(secular_trig(angle_from(f, xi), 6)));
      }
    }
    worst_trig = std::max(worst_trig, std::abs(secular_trig(angle_from(0.0, xi), 6)));
  }

  // away from roots the trig form tracks secular_even / 2
  std::mt19937 rng2(516);
  double worst_cls = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double f = fdist(rng2) * 0.6;
    const double xi = xdist(rng2) * 0.4;
    if (xi == 0.0) continue;
    for (int n_points : {4, 6}) {
      const double even_val = secular_even(f, xi, (n_points - 4) / 2);
      const double trig_val = secular_trig(angle_from(f, xi), n_points);
      worst_cls = std::max(worst_cls,
                           std::abs(even_val - 2.0 * trig_val) / std::max(1.0, std::abs(even_val)));
    }
  }

  const bool pass = worst_rt <= 1e-12 && worst_trig <= 1e-9 && worst_cls <= 1e-9;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "roundtrip=%.1e trig-at-roots=%.1e agreement=%.1e",
                worst_rt, worst_trig, worst_cls);
  report(10, "angle mapping round-trip and trig zero set", pass, detail);
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
