// ptwell: spectra, sweeps, and critical couplings of the discrete
// PT-symmetric square well, with machine-readable CSV/JSON output.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptwell/criticality.hpp"
#include "ptwell/lattice.hpp"
#include "ptwell/oracle.hpp"
#include "ptwell/output.hpp"
#include "ptwell/secular.hpp"

namespace {

using ptwell::Cell;
using ptwell::Complex;
using ptwell::Table;

constexpr double kRealnessTol = 1e-9;

struct SpectrumOptions {
  int n_points = 0;
  double strength = 0.0;
  std::string units = "F";
  std::string format = "csv";
};

struct SweepOptions {
  int n_points = 0;
  double z_min = 0.0;
  double z_max = 0.0;
  int steps = 0;
  std::string out_path = "-";
};

struct ZcritOptions {
  int n_points = 0;
  std::string n_list;
  double tol = 1e-8;
};

struct VerifyOptions {
  int n_points = 0;
  double strength = 0.0;
};

int run_spectrum(const SpectrumOptions& opt) {
  const auto spec = ptwell::make_lattice(opt.n_points);
  const auto result = ptwell::full_spectrum(opt.n_points, opt.strength);

  Table table;
  table.columns = {"index", "re", "im", "is_real", "units"};
  const double h2 = spec.spacing * spec.spacing;
  std::int64_t index = 0;
  for (const Complex& f : result.roots) {
    double re = f.real(), im = f.imag();
    if (opt.units == "E") {
      re = (re + 2.0) / h2;
      im = im / h2;
    }
    table.rows.push_back({index++, re, im, std::abs(f.imag()) <= kRealnessTol, opt.units});
  }
  std::cout << (opt.format == "json" ? ptwell::to_json(table) : ptwell::to_csv(table));
  return 0;
}

int run_sweep(const SweepOptions& opt) {
  const auto spec = ptwell::make_lattice(opt.n_points);

  Table table;
  table.columns = {"Z", "xi", "index", "re_F", "im_F", "is_real"};
  for (int j = 0; j <= opt.steps; ++j) {
    const double z = (j == opt.steps)
                         ? opt.z_max
                         : opt.z_min + j * (opt.z_max - opt.z_min) / opt.steps;
    const double xi = ptwell::convert_units(spec, z, ptwell::UnitConversion::z_to_xi);
    const auto result = ptwell::full_spectrum(opt.n_points, z);
    std::int64_t index = 0;
    for (const Complex& f : result.roots) {
      table.rows.push_back(
          {z, xi, index++, f.real(), f.imag(), std::abs(f.imag()) <= kRealnessTol});
    }
  }

  const std::string rendered = ptwell::to_csv(table);
  if (opt.out_path == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "ptwell: cannot open output file: " << opt.out_path << "\n";
      return 1;
    }
    out << rendered;
    if (!out.good()) {
      std::cerr << "ptwell: write failed: " << opt.out_path << "\n";
      return 1;
    }
  }
  return 0;
}

int run_zcrit(const ZcritOptions& opt) {
  std::vector<int> ns;
  if (!opt.n_list.empty()) {
    std::stringstream ss(opt.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      ns.push_back(std::stoi(item));
    }
  } else {
    ns.push_back(opt.n_points);
  }

  const auto rows = ptwell::convergence_table(ns, opt.tol);
  Table table;
  table.columns = {"N", "z_crit", "method", "iterations"};
  for (const auto& row : rows) {
    table.rows.push_back({static_cast<std::int64_t>(row.n_points), row.z_crit,
                          std::string(row.method == ptwell::CriticalMethod::bisect ? "bisect" : "closed"),
                          static_cast<std::int64_t>(row.iterations)});
  }
  std::cout << ptwell::to_csv(table);
  return 0;
}

int run_verify(const VerifyOptions& opt) {
  const auto spec = ptwell::make_lattice(opt.n_points);
  const auto coupling = ptwell::make_coupling(spec, opt.strength);
  const auto h = ptwell::build_hamiltonian(spec, coupling);
  const auto result = ptwell::full_spectrum(opt.n_points, opt.strength);
  const double xi = coupling.rescaled;
  const int n = spec.half_size;

  bool all_pass = true;
  auto report = [&all_pass](const std::string& name, double value, double tol) {
    const bool pass = value <= tol;
    all_pass = all_pass && pass;
    std::cout << name << " = " << ptwell::format_double(value) << " (tol "
              << ptwell::format_double(tol) << ") " << (pass ? "PASS" : "FAIL") << "\n";
  };

  report("pseudo_hermiticity_defect", ptwell::pseudo_hermiticity_defect(h), 0.0);

  double secular_dev = 0.0;
  for (int j = 0; j < 200; ++j) {
    const double f = -2.5 + 5.0 * j / 199.0;
    const double sec = (spec.parity == ptwell::Parity::even)
                           ? ptwell::secular_even(f, xi, n)
                           : ptwell::secular_odd(f, xi, n);
    const double det = ptwell::char_value(h, Complex(f, 0.0)).real();
    secular_dev = std::max(secular_dev, std::abs(sec - det) / std::max(1.0, std::abs(det)));
  }
  report("secular_vs_determinant_dev", secular_dev, 1e-9);

  std::vector<double> oracle_real;
  for (const Complex& f : result.roots) {
    if (std::abs(f.imag()) <= kRealnessTol) oracle_real.push_back(f.real());
  }
  std::vector<double> secular_real;
  for (const auto& root : ptwell::real_spectrum(opt.n_points, opt.strength, 1e-12)) {
    for (int m = 0; m < root.multiplicity; ++m) secular_real.push_back(root.f);
  }
  double root_agreement = 0.0;
  if (oracle_real.size() != secular_real.size()) {
    root_agreement = 1.0; // count mismatch
  } else {
    for (size_t i = 0; i < oracle_real.size(); ++i) {
      root_agreement = std::max(root_agreement, std::abs(oracle_real[i] - secular_real[i]));
    }
  }
  report("oracle_vs_secular_roots", root_agreement, 1e-8);

  double negation_defect = 0.0;
  {
    std::vector<Complex> negated;
    for (const Complex& f : result.roots) negated.push_back(-f);
    std::sort(negated.begin(), negated.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (size_t i = 0; i < negated.size(); ++i) {
      negation_defect = std::max(negation_defect, std::abs(negated[i] - result.roots[i]));
    }
  }
  report("negation_symmetry_defect", negation_defect, 1e-9);

  double max_residual = 0.0;
  for (double f : oracle_real) {
    const auto vec = ptwell::eigenvector(opt.n_points, opt.strength, f);
    max_residual = std::max(max_residual, ptwell::residual(h, Complex(f, 0.0), vec.components));
  }
  report("eigenvector_residual_max", max_residual, 1e-9);

  std::cout << "spectrum (F units):\n";
  Table table;
  table.columns = {"index", "re", "im", "is_real"};
  std::int64_t index = 0;
  for (const Complex& f : result.roots) {
    table.rows.push_back({index++, f.real(), f.imag(), std::abs(f.imag()) <= kRealnessTol});
  }
  std::cout << ptwell::to_csv(table);

  std::cout << (all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete PT-symmetric square-well spectra"};
  app.require_subcommand(1);

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "All F (or E) eigenvalues at one (N, Z)");
  spectrum->add_option("--N", spectrum_opt.n_points, "Lattice point count (>= 3)")->required();
  spectrum->add_option("--Z", spectrum_opt.strength, "Non-Hermiticity strength")->required();
  spectrum->add_option("--units", spectrum_opt.units, "Output units: F or E")
      ->check(CLI::IsMember({"F", "E"}));
  spectrum->add_option("--format", spectrum_opt.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Spectrum rows over a range of Z values (CSV)");
  sweep->add_option("--N", sweep_opt.n_points, "Lattice point count (>= 3)")->required();
  sweep->add_option("--z-min", sweep_opt.z_min, "First Z value")->required();
  sweep->add_option("--z-max", sweep_opt.z_max, "Last Z value")->required();
  sweep->add_option("--steps", sweep_opt.steps, "Number of steps (steps+1 Z values)")->required();
  sweep->add_option("--out", sweep_opt.out_path, "Output path ('-' for stdout)");

  ZcritOptions zcrit_opt;
  auto* zcrit = app.add_subcommand("zcrit", "Critical coupling Z_crit(N) by bisection");
  auto* zcrit_n = zcrit->add_option("--N", zcrit_opt.n_points, "Lattice point count (>= 3)");
  auto* zcrit_list = zcrit->add_option("--N-list", zcrit_opt.n_list, "Comma-separated N values");
  zcrit->add_option("--tol", zcrit_opt.tol, "Bracket width tolerance");
  zcrit_n->excludes(zcrit_list);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Run the invariant checks at one (N, Z)");
  verify->add_option("--N", verify_opt.n_points, "Lattice point count (>= 3)")->required();
  verify->add_option("--Z", verify_opt.strength, "Non-Hermiticity strength")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_opt);
    if (sweep->parsed()) {
      if (sweep_opt.steps < 2 || sweep_opt.z_min > sweep_opt.z_max) {
        std::cerr << "ptwell: sweep requires steps >= 2 and z-min <= z-max\n";
        return 2;
      }
      return run_sweep(sweep_opt);
    }
    if (zcrit->parsed()) {
      if (zcrit_opt.n_list.empty() && zcrit_opt.n_points == 0) {
        std::cerr << "ptwell: zcrit requires --N or --N-list\n";
        return 2;
      }
      return run_zcrit(zcrit_opt);
    }
    if (verify->parsed()) return run_verify(verify_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "ptwell: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ptwell: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
