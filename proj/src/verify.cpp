#include "kgpt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "kgpt/analytic.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/oracle.hpp"
#include "kgpt/susy.hpp"

namespace kgpt {

namespace {

CheckResult make_check(std::string name, int level, double measured,
                       double tolerance, bool passed, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.level = level;
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

CheckResult failed_with(std::string name, int level, double tolerance,
                        const std::exception& e) {
  return make_check(std::move(name), level, std::nan(""), tolerance, false, e.what());
}

double grid_half_width(const ModelParams& params, double energy,
                       const VerifyOptions& options) {
  return options.half_width > 0.0 ? options.half_width
                                  : default_half_width(params, energy);
}

CheckResult check_shape_invariance(const ModelParams& params, double energy,
                                   const VerifyOptions& options) {
  const auto desc = make_superpotential(params, energy);
  const double reach =
      params.model == Model::LinearMass
          ? 5.0 * std::sqrt(params.hbar / desc.coefficient)
          : 5.0 / params.alpha;
  const int m = std::max(options.shape_samples, 1);
  std::vector<double> xs(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = m == 1 ? 0.0 : -reach + 2.0 * reach * i / (m - 1);
  }
  try {
    const auto report =
        verify_shape_invariance(desc, xs, options.shape_tolerance);
    std::ostringstream d;
    d.precision(12);
    d << "a1=" << report.a1 << " a2=" << report.a2 << " R=" << report.remainder;
    return make_check("shape_invariance", -1, report.max_deviation,
                      options.shape_tolerance, true, d.str());
  } catch (const ShapeInvarianceViolation& e) {
    return failed_with("shape_invariance", -1, options.shape_tolerance, e);
  }
}

double min_real_potential(const GridProblem& grid) {
  double v = grid.potential.empty() ? 0.0 : grid.potential.front().real();
  for (const Complex& p : grid.potential) v = std::min(v, p.real());
  return v;
}

// Three-point truncation error is about (h^2/12 hbar^2) <(eps - V)^2>;
// <(eps - V)^2> is bounded by its value at the minimum of Re V, with a
// factor 2 margin. Levels whose decay length reaches the Dirichlet walls get
// the looser near-threshold floor.
double epsilon_tolerance(const ModelParams& params, const GridProblem& grid,
                         double eps_closed, std::string& note) {
  const double depth = eps_closed - min_real_potential(grid);
  double tol = grid.spacing * grid.spacing * depth * depth /
                   (6.0 * params.hbar * params.hbar) +
               1e-9;
  if (params.model == Model::HyperbolicMass) {
    const double gap = continuum_threshold(params, grid.energy) - eps_closed;
    const double kappa = std::sqrt(std::max(gap, 0.0)) / params.hbar;
    if (kappa * grid.half_width < 18.0) {
      tol = std::max(tol, 1e-3);
      note = " (near-threshold tolerance)";
    }
  }
  return tol;
}

void check_oracle(const ModelParams& params, const SpectrumLevel& level,
                  const VerifyOptions& options, std::vector<CheckResult>& out) {
  const int n = level.n;
  const double energy = level.energy_plus;
  try {
    const double L = grid_half_width(params, energy, options);
    const double offset = options.stationary_contour
                              ? stationary_contour_offset(params, energy)
                              : 0.0;
    const GridProblem grid =
        discretize(params, energy, L, options.num_points, offset);
    const OracleSpectrum spectrum = bound_state_spectrum(grid, n + 1);
    if (static_cast<int>(spectrum.eigenvalues.size()) <= n) {
      throw InadmissibleLevel("grid resolves too few localised levels");
    }
    const Complex eps_grid = spectrum.eigenvalues[n];
    const double eps_closed = epsilon_closed_form(params, n, energy);

    std::string note;
    const double tol = epsilon_tolerance(params, grid, eps_closed, note);
    const double err = std::abs(eps_grid.real() - eps_closed);
    std::ostringstream d;
    d.precision(12);
    d << "eps_grid=" << eps_grid.real() << " eps_closed=" << eps_closed
      << " h=" << grid.spacing;
    if (offset != 0.0) d << " contour Im x=" << offset;
    d << note;
    out.push_back(make_check("oracle_spectrum", n, err, tol, err <= tol, d.str()));

    const double imag = spectrum.max_imag;
    out.push_back(make_check("oracle_reality", n, imag, options.reality_tolerance,
                             imag <= options.reality_tolerance));
  } catch (const Error& e) {
    out.push_back(failed_with("oracle_spectrum", n, 0.0, e));
  }
}

void check_roots(const ModelParams& params, const SpectrumLevel& level,
                 const VerifyOptions& options, std::vector<CheckResult>& out) {
  const int n = level.n;
  const double target = level.energy_plus;
  try {
    const double root = quantization_root(params, n, 0.0, 2.0 * target);
    const double rel = std::abs(root - target) / std::abs(target);
    std::ostringstream d;
    d.precision(17);
    d << "root=" << root << " closed=" << target;
    out.push_back(make_check("quantization_root", n, rel, options.root_tolerance,
                             rel <= options.root_tolerance, d.str()));
  } catch (const Error& e) {
    out.push_back(failed_with("quantization_root", n, options.root_tolerance, e));
  }

  if (n >= options.grid_root_levels) return;
  try {
    GridOptions grid;
    grid.num_points = options.num_points;
    grid.half_width = options.half_width;
    grid.stationary_contour = options.stationary_contour;
    const double root = quantization_root(params, n, 0.8 * target, 1.2 * target,
                                          EpsilonSource::Grid, grid);
    const double rel = std::abs(root - target) / std::abs(target);

    // The grid error in eps_n maps to an energy error through d eps_n / dE.
    const double L = grid_half_width(params, target, options);
    const GridProblem at_root = discretize(params, target, L, options.num_points);
    std::string note;
    const double eps_tol = epsilon_tolerance(params, at_root, 0.0, note);
    const double step = 1e-6 * target;
    const double slope = (epsilon_closed_form(params, n, target + step) -
                          epsilon_closed_form(params, n, target - step)) /
                         (2.0 * step);
    const double tol = std::max(options.grid_root_tolerance,
                                eps_tol / std::abs(slope) / std::abs(target));
    std::ostringstream d;
    d.precision(12);
    d << "root=" << root << " closed=" << target << note;
    out.push_back(make_check("grid_quantization_root", n, rel, tol, rel <= tol,
                             d.str()));
  } catch (const Error& e) {
    out.push_back(
        failed_with("grid_quantization_root", n, options.grid_root_tolerance, e));
  }
}

void check_residual(const ModelParams& params, const SpectrumLevel& level,
                    const VerifyOptions& options, std::vector<CheckResult>& out) {
  const int n = level.n;
  try {
    const Wavefunction psi(params, level);
    const double energy = level.energy_plus * (1.0 + options.energy_perturbation);
    const double L = grid_half_width(params, level.energy_plus, options);
    const int coarse_points = options.num_points;
    const int fine_points = 2 * options.num_points - 1;
    const double coarse =
        residual_check(discretize(params, energy, L, coarse_points), psi);
    const double fine = residual_check(discretize(params, energy, L, fine_points), psi);
    const double order = std::log2(coarse / fine);
    std::ostringstream d;
    d.precision(6);
    d << "residual(N=" << coarse_points << ")=" << coarse << " residual(N="
      << fine_points << ")=" << fine;
    if (options.energy_perturbation != 0.0) {
      d << " energy perturbed by " << options.energy_perturbation;
    }
    const bool ok = std::isfinite(order) &&
                    std::abs(order - options.order_target) <= options.order_window;
    out.push_back(make_check("residual_order", n, order, options.order_window, ok,
                             d.str()));
  } catch (const Error& e) {
    out.push_back(failed_with("residual_order", n, options.order_window, e));
  }
}

void check_wavefunction(const ModelParams& params, const SpectrumLevel& level,
                        const VerifyOptions& options,
                        std::vector<CheckResult>& out) {
  const int n = level.n;
  try {
    const Wavefunction psi(params, level);
    const QuadratureResult norm = pt_norm(psi);
    const double expected = n % 2 == 0 ? 1.0 : -1.0;
    const double err = std::abs(norm.value - expected);
    std::ostringstream d;
    d.precision(15);
    d << "norm=" << norm.value.real() << (norm.value.imag() < 0 ? "" : "+")
      << norm.value.imag() << "i";
    if (norm.truncation_warning) d << " truncation warning";
    out.push_back(make_check("pt_norm", n, err, options.norm_tolerance,
                             err <= options.norm_tolerance, d.str()));

    // |psi| may exceed 1 on the real axis for Model I with eta != 0, so the
    // deviation is measured relative to max(1, peak).
    const double reach = psi.support_half_width();
    constexpr int kPairs = 50;
    double worst = 0.0;
    double peak = 0.0;
    for (int i = 1; i <= kPairs; ++i) {
      const double x = reach * i / kPairs;
      const Complex right = psi(x);
      const Complex left = psi(-x);
      worst = std::max(worst, std::abs(right - std::conj(left)));
      peak = std::max({peak, std::abs(right), std::abs(left)});
    }
    const double measured = worst / std::max(1.0, peak);
    out.push_back(make_check("pt_conjugacy", n, measured,
                             options.conjugacy_tolerance,
                             measured <= options.conjugacy_tolerance));
  } catch (const Error& e) {
    out.push_back(failed_with("pt_norm", n, options.norm_tolerance, e));
  }
}

CheckResult check_level_count(const ModelParams& params, const LevelBounds& bounds,
                              const VerifyOptions& options) {
  const int expected = bounds.n_max_effective + 1;
  try {
    const double L = grid_half_width(params, 0.0, options);
    const GridProblem grid = discretize(params, 0.0, L, options.num_points);
    const int k = std::min<int>(expected + 3, static_cast<int>(grid.dimension()));
    const OracleSpectrum spectrum = eigen_spectrum(grid, k);
    const int count = count_below(spectrum, continuum_threshold(params, 0.0));
    std::ostringstream d;
    d << "grid levels below threshold at E=0: " << count << ", expected "
      << expected;
    return make_check("level_count", -1, count, expected, count == expected,
                      d.str());
  } catch (const Error& e) {
    return failed_with("level_count", -1, expected, e);
  }
}

}  // namespace

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed && !c.skipped) return &c;
  }
  return nullptr;
}

VerificationReport run_verification(const ModelParams& params,
                                    const VerifyOptions& options) {
  params.validate();
  if (options.num_points < 5 || options.num_points % 2 == 0) {
    throw InvalidParameter("num_points must be odd and at least 5");
  }
  if (options.max_level < 0) throw InvalidParameter("max_level must be >= 0");

  VerificationReport report;
  report.params = params;
  const Spectrum spectrum = bound_energies(params, options.max_level);
  report.physical_levels = static_cast<int>(spectrum.levels.size());

  const double shape_energy =
      spectrum.levels.empty() ? 0.0 : spectrum.levels.front().energy_plus;
  report.checks.push_back(check_shape_invariance(params, shape_energy, options));

  if (spectrum.bounds.bounded) {
    report.checks.push_back(check_level_count(params, spectrum.bounds, options));
  }

  if (spectrum.levels.empty()) {
    CheckResult none = make_check("bound_states", -1, 0.0, 0.0, true,
                                  spectrum.bounds.constraint_satisfied
                                      ? "no physical levels"
                                      : "no physical levels: lambda^2 <= hbar alpha^2 |eta|");
    none.skipped = true;
    report.checks.push_back(none);
  }

  for (const SpectrumLevel& level : spectrum.levels) {
    check_oracle(params, level, options, report.checks);
    check_roots(params, level, options, report.checks);
    check_residual(params, level, options, report.checks);
    check_wavefunction(params, level, options, report.checks);
  }
  return report;
}

}  // namespace kgpt
