// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are pinned
// here; exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "kgpt/analytic.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/oracle.hpp"
#include "kgpt/specfun.hpp"
#include "kgpt/susy.hpp"
#include "test_support.hpp"

using namespace kgpt;
using kgpt::test::Draws;
using kgpt::test::linspace;

namespace {

namespace tol {
constexpr double kShape = 1e-10;
constexpr double kGridEigen = 5e-4;
constexpr double kRefinementRatio = 3.5;
constexpr double kRoot = 1e-10;
constexpr double kNorm = 1e-7;
constexpr double kConjugacy = 1e-10;
constexpr double kOrderTarget = 2.0;
constexpr double kOrderWindow = 0.2;
constexpr double kPerturbationGain = 1e3;
constexpr double kXiIndependence = 1e-9;
constexpr double kAlphaWavefunction = 1e-3;
constexpr double kJacobiSymmetry = 1e-10;
constexpr double kOdeResidual = 1e-8;
constexpr double kGammaModulus = 1e-12;
}  // namespace tol

struct Outcome {
  bool passed = false;
  std::string summary;
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

bool within_order(double order) {
  return std::isfinite(order) && std::abs(order - tol::kOrderTarget) <= tol::kOrderWindow;
}

std::vector<double> window(const SuperpotentialDescriptor& d, int count) {
  const ModelParams& p = d.params;
  const double half = p.model == Model::LinearMass ? 5.0 * std::sqrt(p.hbar / d.coefficient)
                                                   : 5.0 / p.alpha;
  return linspace(-half, half, count);
}

Outcome shape_invariance() {
  Draws draws(101);
  double worst = 0.0;
  int failures = 0;
  for (Model model : {Model::LinearMass, Model::HyperbolicMass}) {
    for (int i = 0; i < 50; ++i) {
      const ModelParams p = draws.any(model);
      const SuperpotentialDescriptor d = make_superpotential(p, draws.uniform(-4.0, 4.0));
      try {
        worst = std::max(worst, verify_shape_invariance(d, window(d, 50), tol::kShape)
                                    .max_deviation);
      } catch (const ShapeInvarianceViolation&) {
        ++failures;
      }
    }
  }
  return {failures == 0 && worst <= tol::kShape,
          fmt("max |V+(a1) - V-(a2) - R(a1)| = %.2e over 100 draws x 50 points "
              "(tol %.0e, %d violations)",
              worst, tol::kShape, failures)};
}

Outcome grid_spectrum() {
  const ModelParams p = linear_mass(1.0, 1.0, 0.0);
  const OracleSpectrum coarse = eigen_spectrum(discretize(p, 0.0, 12.0, 801), 4);
  const OracleSpectrum fine = eigen_spectrum(discretize(p, 0.0, 12.0, 1601), 4);
  double worst = 0.0, min_ratio = 1e300;
  std::string errors;
  for (int n = 0; n < 4; ++n) {
    const double exact = 2.0 * n + 2.0;
    const double ec = std::abs(coarse.eigenvalues[n] - exact);
    const double ef = std::abs(fine.eigenvalues[n] - exact);
    worst = std::max(worst, ec);
    min_ratio = std::min(min_ratio, ec / ef);
    errors += fmt("%s%.2e", n ? "," : "", ec);
  }
  return {worst <= tol::kGridEigen && min_ratio >= tol::kRefinementRatio,
          fmt("N=801 errors [%s], max %.2e (tol %.0e); N=1601 refinement ratio >= %.3f "
              "(need %.1f)",
              errors.c_str(), worst, tol::kGridEigen, min_ratio, tol::kRefinementRatio)};
}

Outcome quantization_roots() {
  double worst = 0.0;
  const ModelParams lin = linear_mass(1.0, 3.0, 4.0);
  for (int n = 0; n <= 10; ++n) {
    const double closed = bound_level(lin, n).energy_plus;
    const double root = quantization_root(lin, n, 0.0, 2.0 * closed);
    worst = std::max(worst, std::abs(root - closed) / closed);
  }
  const double e0 = 5.0 / 3.0 * std::sqrt(6.0);
  worst = std::max(worst, std::abs(bound_level(lin, 0).energy_plus - e0) / e0);

  const ModelParams hyp = hyperbolic_mass(1.0, 2.0, 0.0, 1.0);
  const double frozen[] = {1.6004851804402408, 2.1644071794434824};
  const Spectrum s = bound_energies(hyp, 5);
  bool count_ok = s.levels.size() == 2;
  for (int n = 0; n < 2 && count_ok; ++n) {
    const double root = quantization_root(hyp, n, 0.0, 5.0);
    worst = std::max(worst, std::abs(root - frozen[n]) / frozen[n]);
    worst = std::max(worst, std::abs(s.levels[n].energy_plus - frozen[n]) / frozen[n]);
  }
  return {count_ok && worst <= tol::kRoot,
          fmt("max relative |root - closed form| = %.2e over linear n<=10 and hyperbolic "
              "n<=1 (tol %.0e)",
              worst, tol::kRoot)};
}

Outcome level_counting() {
  const ModelParams two = hyperbolic_mass(1.0, 2.0, 0.0, 1.0);
  const ModelParams none = hyperbolic_mass(1.0, 1.0, 1.5, 1.0);
  const std::size_t n_two = bound_energies(two, 20).levels.size();
  const std::size_t n_none = bound_energies(none, 20).levels.size();
  const GridProblem g = discretize(two, 0.0, default_half_width(two, 0.0), 801);
  const int grid_count = count_below(eigen_spectrum(g, 10), continuum_threshold(two, 0.0));
  return {n_two == 2 && n_none == 0 && grid_count == 2,
          fmt("closed form %zu and %zu levels (want 2 and 0); grid levels below "
              "threshold %d (want 2)",
              n_two, n_none, grid_count)};
}

std::vector<ModelParams> norm_cases() {
  return {linear_mass(1.0, 1.0, 0.0), linear_mass(1.0, 1.0, 0.5), linear_mass(1.0, 3.0, 4.0),
          hyperbolic_mass(1.0, 2.0, 0.0, 1.0), hyperbolic_mass(1.0, 2.0, 0.5, 1.0),
          hyperbolic_mass(1.0, 3.0, 0.5, 0.7)};
}

std::vector<SpectrumLevel> tested_levels(const ModelParams& p) {
  return bound_energies(p, p.model == Model::LinearMass ? 8 : 1000).levels;
}

Outcome pt_normalisation() {
  double worst = 0.0;
  int count = 0;
  for (const ModelParams& p : norm_cases()) {
    for (const SpectrumLevel& level : tested_levels(p)) {
      for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const QuadratureResult r = pt_norm(Wavefunction(p, level, branch));
        worst = std::max(worst, std::abs(r.value - (level.n % 2 ? -1.0 : 1.0)));
        ++count;
      }
    }
  }
  return {worst <= tol::kNorm,
          fmt("max |int psi^2 - (-1)^n| = %.2e over %d states (tol %.0e)", worst, count,
              tol::kNorm)};
}

Outcome pt_conjugacy() {
  double worst = 0.0;
  int count = 0;
  for (const ModelParams& p : norm_cases()) {
    for (const SpectrumLevel& level : tested_levels(p)) {
      const Wavefunction psi(p, level);
      double dev = 0.0, peak = 0.0;
      for (double x : linspace(0.0, psi.support_half_width(), 201)) {
        const Complex right = psi(x), left = psi(-x);
        dev = std::max(dev, std::abs(right - std::conj(left)));
        peak = std::max({peak, std::abs(right), std::abs(left)});
      }
      worst = std::max(worst, dev / std::max(1.0, peak));
      ++count;
    }
  }
  return {worst <= tol::kConjugacy,
          fmt("max |psi(x) - conj psi(-x)| / max(1, peak) = %.2e over %d states (tol %.0e)",
              worst, count, tol::kConjugacy)};
}

// Refinement pair h = 0.01 -> 0.005 on [-10, 10]. The perturbed residual is
// O(1) while the exact one is O(h^2), so the gain is judged on the finer grid
// and the h = 0.01 value is reported alongside.
Outcome ode_residual() {
  struct Case {
    ModelParams params;
    int max_level;
  };
  const Case cases[] = {{linear_mass(1.0, 1.0, 0.0), 3},
                        {linear_mass(1.0, 1.0, 0.5), 3},
                        {hyperbolic_mass(1.0, 2.0, 0.5, 1.0), 1},
                        {hyperbolic_mass(1.0, 3.0, 0.5, 0.7), 2}};
  constexpr double kHalfWidth = 10.0;
  constexpr int kCoarse = 2001, kFine = 4001;
  double worst_order_gap = 0.0, min_gain = 1e300, min_gain_coarse = 1e300;
  bool orders_ok = true;
  for (const Case& c : cases) {
    for (const SpectrumLevel& level : bound_energies(c.params, c.max_level).levels) {
      const Wavefunction psi(c.params, level);
      const double e = psi.spec().energy;
      const double coarse = residual_check(discretize(c.params, e, kHalfWidth, kCoarse), psi);
      const double fine = residual_check(discretize(c.params, e, kHalfWidth, kFine), psi);
      const double order = std::log2(coarse / fine);
      orders_ok = orders_ok && within_order(order);
      worst_order_gap = std::max(worst_order_gap, std::abs(order - tol::kOrderTarget));
      if (level.n == 0) {
        const double e_off = 1.01 * e;
        min_gain = std::min(
            min_gain, residual_check(discretize(c.params, e_off, kHalfWidth, kFine), psi) / fine);
        min_gain_coarse = std::min(
            min_gain_coarse,
            residual_check(discretize(c.params, e_off, kHalfWidth, kCoarse), psi) / coarse);
      }
    }
  }
  return {orders_ok && min_gain >= tol::kPerturbationGain,
          fmt("max |order - 2| = %.3f (window %.1f); 1%% energy shift inflates the "
              "ground-state residual >= %.0fx at h=0.005 (need %.0fx; %.0fx at h=0.01)",
              worst_order_gap, tol::kOrderWindow, min_gain, tol::kPerturbationGain,
              min_gain_coarse)};
}

Outcome nonrelativistic() {
  const double cs[] = {1e2, 1e3, 1e4};
  const int levels[] = {0, 1, 2};
  const LimitReport flat = nonrelativistic_limit_check(1.0, 1.0, 0.0, cs, levels);
  bool orders_ok = true;
  double worst_gap = 0.0;
  for (const LimitRow& row : flat.rows) {
    if (std::isnan(row.order)) continue;
    orders_ok = orders_ok && within_order(row.order);
    worst_gap = std::max(worst_gap, std::abs(row.order - tol::kOrderTarget));
  }
  const LimitReport shifted = nonrelativistic_limit_check(1.0, 1.0, 1.0, cs, levels);
  double worst_shift = 0.0;
  for (const LimitRow& row : shifted.rows) {
    worst_shift = std::max(worst_shift, std::abs(row.xi_shift));
  }
  return {orders_ok && worst_shift <= tol::kXiIndependence,
          fmt("order in 1/c: max |order - 2| = %.4f (window %.1f); xi=1 vs xi=0 "
              "energy shift max %.6f (tol %.0e)",
              worst_gap, tol::kOrderWindow, worst_shift, tol::kXiIndependence)};
}

Outcome alpha_limit() {
  const double alphas[] = {0.1, 0.05, 0.025};
  const double fine[] = {0.01};
  const int levels[] = {0, 1};
  bool orders_ok = true;
  double worst_gap = 0.0, worst_psi = 0.0;
  for (const ModelParams& p :
       {hyperbolic_mass(1.0, 1.0, 0.0, 1.0), hyperbolic_mass(1.0, 1.0, 0.5, 1.0)}) {
    for (const LimitRow& row : alpha_limit_check(p, alphas, levels).rows) {
      if (!row.admissible) orders_ok = false;
      if (std::isnan(row.order)) continue;
      orders_ok = orders_ok && within_order(row.order);
      worst_gap = std::max(worst_gap, std::abs(row.order - tol::kOrderTarget));
    }
    for (const LimitRow& row : alpha_limit_check(p, fine, levels).rows) {
      worst_psi = std::max(worst_psi, row.admissible ? row.wavefunction_deviation : 1e300);
    }
  }
  return {orders_ok && worst_psi <= tol::kAlphaWavefunction,
          fmt("max |order - 2| = %.4f (window %.1f); wavefunction deviation at alpha=0.01 "
              "max %.2e (tol %.0e)",
              worst_gap, tol::kOrderWindow, worst_psi, tol::kAlphaWavefunction)};
}

double relative_ode_residual(std::initializer_list<Complex> terms) {
  Complex sum = 0.0;
  double scale = 0.0;
  for (const Complex& t : terms) {
    sum += t;
    scale += std::abs(t);
  }
  return scale > 0.0 ? std::abs(sum) / scale : 0.0;
}

Outcome special_functions() {
  Draws draws(202);
  double symmetry = 0.0, hermite_res = 0.0, jacobi_res = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex a = draws.complex(3.0), b = draws.complex(3.0), z = draws.complex(1.5);
    for (int n = 0; n <= 10; ++n) {
      const Complex lhs = jacobi(n, a, b, -z);
      const Complex rhs = (n % 2 ? -1.0 : 1.0) * jacobi(n, b, a, z);
      symmetry = std::max(symmetry, std::abs(lhs - rhs) / std::abs(rhs));

      const double nd = n;
      jacobi_res = std::max(
          jacobi_res,
          relative_ode_residual({(1.0 - z * z) * jacobi_derivative(n, a, b, z, 2),
                                 (b - a - (a + b + 2.0) * z) * jacobi_derivative(n, a, b, z, 1),
                                 nd * (nd + a + b + 1.0) * jacobi(n, a, b, z)}));
      const Complex w = draws.complex(3.0);
      hermite_res = std::max(
          hermite_res,
          relative_ode_residual({n >= 2 ? 4.0 * nd * (nd - 1.0) * hermite(n - 2, w) : 0.0,
                                 n >= 1 ? -4.0 * nd * w * hermite(n - 1, w) : 0.0,
                                 2.0 * nd * hermite(n, w)}));
    }
  }
  const double pi = std::numbers::pi;
  const double gamma_err = std::abs(std::abs(gamma(Complex(1.0, 1.0))) -
                                    std::sqrt(pi / std::sinh(pi))) /
                           std::sqrt(pi / std::sinh(pi));
  return {symmetry <= tol::kJacobiSymmetry && hermite_res <= tol::kOdeResidual &&
              jacobi_res <= tol::kOdeResidual && gamma_err <= tol::kGammaModulus,
          fmt("Jacobi reflection %.2e (tol %.0e); ODE residuals Hermite %.2e, Jacobi %.2e "
              "(tol %.0e); |Gamma(1+i)| %.2e (tol %.0e)",
              symmetry, tol::kJacobiSymmetry, hermite_res, jacobi_res, tol::kOdeResidual,
              gamma_err, tol::kGammaModulus)};
}

Outcome monotonicity() {
  int violations = 0;
  const std::vector<double> etas = linspace(0.0, 3.0, 10);
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (int n = 0; n <= 5; ++n) {
      double previous = 0.0;
      for (double eta : etas) {
        const double e = std::abs(bound_level(linear_mass(1.0, lambda, eta), n).energy_plus);
        if (!(e > previous)) ++violations;
        previous = e;
      }
    }
  }

  for (double lambda : {2.0, 3.0}) {
    const double alpha = 0.7;
    const ModelParams base = hyperbolic_mass(1.0, lambda, 0.0, alpha);
    const int cap0 = level_bounds(base).n_max_physical;
    int previous_cap = cap0;
    for (double eta : linspace(0.0, 0.99 * lambda * lambda / (alpha * alpha), 10)) {
      const ModelParams p = hyperbolic_mass(1.0, lambda, eta, alpha);
      const int cap = level_bounds(p).n_max_physical;
      if (cap > previous_cap || cap > cap0) ++violations;
      previous_cap = cap;
      for (const SpectrumLevel& level : bound_energies(p, 100).levels) {
        if (std::abs(bound_level(base, level.n).energy_plus) >
            std::abs(level.energy_plus) * (1.0 + 1e-15)) {
          ++violations;
        }
      }
    }
  }
  return {violations == 0,
          fmt("%d ordering violations (linear |E_n| vs |eta|; hyperbolic caps and "
              "|E_n| vs eta=0 on 10-point sweeps)",
              violations)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"shape invariance", shape_invariance},
      {"closed form vs grid spectrum", grid_spectrum},
      {"quantization roots", quantization_roots},
      {"level counting", level_counting},
      {"PT normalization", pt_normalisation},
      {"PT self-conjugacy", pt_conjugacy},
      {"ODE residual", ode_residual},
      {"nonrelativistic limit", nonrelativistic},
      {"alpha to zero", alpha_limit},
      {"special functions", special_functions},
      {"monotonicity", monotonicity},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.passed) ++failed;
    std::printf("%s %2d %-30s %s [%.1fs]\n", outcome.passed ? "PASS" : "FAIL", index, c.name,
                outcome.summary.c_str(), seconds);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
