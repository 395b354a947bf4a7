#include "kgpt/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "kgpt/errors.hpp"

namespace kgpt {

namespace {

constexpr double kDegenerateDenominator = 1e-14;

Complex quarter_turn(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double softplus(double y) {
  return std::max(y, 0.0) + std::log1p(std::exp(-std::abs(y)));
}

// log(1 + e^s), analytic in |Im s| < pi and equal to softplus on the real line.
Complex softplus(Complex s) {
  return s.real() > 0.0 ? s + std::log(1.0 + std::exp(-s)) : std::log(1.0 + std::exp(s));
}

double linear_energy(const ModelParams& p, int n) {
  const double a = solve_leading_coefficient(p);
  const double c2 = p.c * p.c;
  return a / p.lambda *
         std::sqrt(p.mu * p.mu * c2 * c2 + (2.0 * n + 1.0) * p.hbar * c2 * a);
}

struct HyperbolicTerms {
  double numerator;
  double denominator;
};

HyperbolicTerms hyperbolic_terms(const ModelParams& p, int n) {
  const double b = solve_leading_coefficient(p);
  const double h = p.hbar * p.alpha * p.alpha;
  const double bn = b - n * h;
  const double c2 = p.c * p.c;
  return {p.mu * p.mu * c2 * c2 +
              c2 / (p.alpha * p.alpha) * (b * (b + h) - bn * bn),
          1.0 - p.eta * p.eta / (bn * bn)};
}

SpectrumLevel make_level(const ModelParams& p, int n, double e) {
  return {n, e, -e, p.model};
}

}  // namespace

LevelBounds level_bounds(const ModelParams& p) {
  p.validate();
  LevelBounds out;
  if (p.model == Model::LinearMass) return out;
  const double b = solve_leading_coefficient(p);
  const double h = p.hbar * p.alpha * p.alpha;
  out.bounded = true;
  out.n_max_effective = detail::largest_integer_below(b / h);
  out.n_max_physical =
      std::max(-1, detail::largest_integer_below((b - std::abs(p.eta)) / h));
  out.constraint_satisfied = p.lambda * p.lambda > h * std::abs(p.eta);
  return out;
}

SpectrumLevel bound_level(const ModelParams& p, int n) {
  p.validate();
  if (n < 0) throw InvalidParameter("level index must be >= 0");
  if (p.model == Model::LinearMass) return make_level(p, n, linear_energy(p, n));

  const LevelBounds bounds = level_bounds(p);
  if (n > bounds.n_max_physical) {
    std::ostringstream msg;
    msg << "level n = " << n << " is not a bound state (physical cap "
        << bounds.n_max_physical << ")";
    throw InadmissibleLevel(msg.str());
  }
  const HyperbolicTerms t = hyperbolic_terms(p, n);
  if (t.denominator <= kDegenerateDenominator) {
    std::ostringstream msg;
    msg << "level n = " << n << " is degenerate: 1 - eta^2/(B - n hbar alpha^2)^2 = "
        << t.denominator;
    throw DegenerateLevel(msg.str());
  }
  return make_level(p, n, std::sqrt(t.numerator / t.denominator));
}

Spectrum bound_energies(const ModelParams& p, int n_cutoff) {
  p.validate();
  if (n_cutoff < 0) throw InvalidParameter("n_cutoff must be >= 0");
  Spectrum out;
  out.model = p.model;
  out.bounds = level_bounds(p);
  const int last = out.bounds.bounded ? std::min(n_cutoff, out.bounds.n_max_physical)
                                      : n_cutoff;
  for (int n = 0; n <= last; ++n) {
    try {
      out.levels.push_back(bound_level(p, n));
    } catch (const DegenerateLevel&) {
      out.degenerate.push_back(n);
    }
  }
  return out;
}

std::vector<SpectrumLevel> special_case_massless(const ModelParams& p,
                                                 int n_cutoff) {
  p.validate();
  if (p.model != Model::LinearMass || p.mu != 0.0) {
    throw InvalidParameter("massless special case needs the linear model with mu = 0");
  }
  const double a = solve_leading_coefficient(p);
  std::vector<SpectrumLevel> out;
  for (int n = 0; n <= n_cutoff; ++n) {
    out.push_back(make_level(
        p, n, p.c / p.lambda * std::sqrt((2.0 * n + 1.0) * p.hbar * a * a * a)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wavefunctions

Wavefunction::Wavefunction(const ModelParams& params, const SpectrumLevel& level,
                           Branch branch)
    : params_(params) {
  params_.validate();
  if (level.model != params.model) {
    throw InvalidParameter("spectrum level belongs to a different model");
  }
  const LevelBounds bounds = level_bounds(params_);
  if (bounds.bounded && level.n > bounds.n_max_physical) {
    std::ostringstream msg;
    msg << "level n = " << level.n << " exceeds the physical cap "
        << bounds.n_max_physical;
    throw InadmissibleLevel(msg.str());
  }
  const int n = level.n;
  const double hb = params_.hbar;
  spec_.n = n;
  spec_.model = params_.model;
  spec_.level = level;
  spec_.branch = branch;
  spec_.energy = level.energy(branch);
  spec_.coefficient = solve_leading_coefficient(params_);
  spec_.phase_quarter_turns = n % 4;

  const double log_factorial = std::lgamma(n + 1.0);
  if (params_.model == Model::LinearMass) {
    const double a = spec_.coefficient;
    spec_.center_shift = {0.0, params_.eta * spec_.energy / (params_.c * a * a)};
    spec_.log_normalization = 0.25 * std::log(a / (detail::kPi * hb)) -
                              0.5 * (n * std::log(2.0) + log_factorial);
  } else {
    const double al = params_.alpha;
    const double h = hb * al * al;
    const double bn = spec_.coefficient - n * h;
    const double re = bn / h;
    const double im = params_.eta * spec_.energy / (al * hb * params_.c * bn);
    spec_.exponent_a = {re, im};
    spec_.exponent_b = {re, -im};
    // |N| = |a| sqrt(alpha n! Gamma(2 Re a + n + 1)) /
    //       (2^{Re a} sqrt(Re a) |Gamma(a + n + 1)|)
    const Complex a = spec_.exponent_a;
    spec_.log_normalization =
        std::log(std::abs(a)) +
        0.5 * (std::log(al) + log_factorial +
               log_gamma(Complex(2.0 * re + n + 1.0, 0.0)).real()) -
        re * std::log(2.0) - 0.5 * std::log(re) -
        log_gamma(a + static_cast<double>(n + 1)).real();
  }
  spec_.normalization_magnitude = std::exp(spec_.log_normalization);
}

Wavefunction Wavefunction::for_level(const ModelParams& params, int n,
                                     Branch branch) {
  return Wavefunction(params, bound_level(params, n), branch);
}

Jet Wavefunction::jet(double x) const {
  detail::require_finite(x, "x");
  return params_.model == Model::LinearMass ? jet_linear(Complex(x, 0.0))
                                            : jet_hyperbolic(x);
}

Complex Wavefunction::continued(Complex z) const {
  if (params_.model == Model::LinearMass) return jet_linear(z).value;
  const double reach = 0.5 * detail::kPi / params_.alpha;
  if (!(std::abs(z.imag()) < reach)) {
    throw InvalidParameter("continuation must stay inside |Im alpha z| < pi/2");
  }
  return value_hyperbolic(z);
}

double Wavefunction::stationary_contour_offset() const {
  if (params_.model == Model::LinearMass) return -spec_.center_shift.imag();
  const Complex a = spec_.exponent_a;
  return -std::atan2(a.imag(), a.real()) / params_.alpha;
}

Jet Wavefunction::jet_linear(Complex z) const {
  const int n = spec_.n;
  const double s = std::sqrt(spec_.coefficient / params_.hbar);
  const Complex u = s * (z + spec_.center_shift);
  const Complex h0 = hermite(n, u);
  const Complex h1 = n >= 1 ? 2.0 * n * hermite(n - 1, u) : Complex(0.0);
  const Complex h2 = n >= 2 ? 4.0 * n * (n - 1.0) * hermite(n - 2, u) : Complex(0.0);
  const Complex envelope =
      quarter_turn(spec_.phase_quarter_turns) *
      std::exp(spec_.log_normalization - 0.5 * u * u);
  return {envelope * h0, s * envelope * (h1 - u * h0),
          s * s * envelope * (h2 - 2.0 * u * h1 + (u * u - 1.0) * h0)};
}

Jet Wavefunction::jet_hyperbolic(double x) const {
  const int n = spec_.n;
  const double al = params_.alpha;
  const double y = al * x;
  const double t = std::tanh(y);
  const double sech2 = detail::sech_squared(y);
  const Complex a = spec_.exponent_a;
  const Complex b = spec_.exponent_b;
  const double ln2 = std::log(2.0);
  const double log_minus = ln2 - softplus(2.0 * y);   // log(1 - t)
  const double log_plus = ln2 - softplus(-2.0 * y);   // log(1 + t)
  const Complex g = quarter_turn(spec_.phase_quarter_turns) *
                    std::exp(spec_.log_normalization + 0.5 * a * log_minus +
                             0.5 * b * log_plus);
  // d/dx log g and its derivative
  const Complex l1 = 0.5 * al * ((b - a) - (a + b) * t);
  const Complex l1p = -0.5 * al * al * (a + b) * sech2;

  const Complex p0 = jacobi(n, a, b, t);
  const Complex pt1 = jacobi_derivative(n, a, b, t, 1);
  const Complex pt2 = jacobi_derivative(n, a, b, t, 2);
  const Complex px1 = pt1 * al * sech2;
  const Complex px2 = pt2 * al * al * sech2 * sech2 - 2.0 * al * al * t * sech2 * pt1;

  const Complex g1 = g * l1;
  const Complex g2 = g * (l1 * l1 + l1p);
  return {g * p0, g1 * p0 + g * px1, g2 * p0 + 2.0 * g1 * px1 + g * px2};
}

Complex Wavefunction::value_hyperbolic(Complex z) const {
  const Complex w = params_.alpha * z;
  const Complex a = spec_.exponent_a;
  const Complex b = spec_.exponent_b;
  const double ln2 = std::log(2.0);
  const Complex log_minus = ln2 - softplus(2.0 * w);
  const Complex log_plus = ln2 - softplus(-2.0 * w);
  const Complex g = quarter_turn(spec_.phase_quarter_turns) *
                    std::exp(spec_.log_normalization + 0.5 * a * log_minus +
                             0.5 * b * log_plus);
  return g * jacobi(spec_.n, a, b, std::tanh(w));
}

double Wavefunction::support_half_width() const {
  const int n = spec_.n;
  if (params_.model == Model::LinearMass) {
    return std::abs(spec_.center_shift.imag()) +
           12.0 / std::sqrt(spec_.coefficient / params_.hbar);
  }
  // |psi|^2 ~ cosh(alpha x)^{-2 Re a}: solve 2 Re a log cosh(alpha L) = 38.
  const double re = spec_.exponent_a.real();
  const double target = 19.0 / re;
  const double scaled = target > 20.0 ? target + std::log(2.0)
                                      : std::acosh(std::exp(target));
  const double turning =
      std::sqrt((2.0 * n + 1.0) / (re * params_.alpha * params_.alpha));
  return 1.25 * (scaled / params_.alpha + turning);
}

int Wavefunction::quadrature_panels() const {
  const double L = support_half_width();
  double scale = 0.0;
  double rate = 0.0;  // phase rate of psi^2
  if (params_.model == Model::LinearMass) {
    const double k = spec_.coefficient / params_.hbar;
    scale = 1.0 / std::sqrt(k);
    rate = 2.0 * k * std::abs(spec_.center_shift.imag());
  } else {
    const double al = params_.alpha;
    // On lines up to the saddle offset the peak narrows by at most
    // cos(alpha * offset).
    scale = std::cos(al * stationary_contour_offset()) *
            std::min(1.0 / al, 1.0 / std::sqrt(spec_.exponent_a.real() * al * al));
    rate = 2.0 * al * std::abs(spec_.exponent_a.imag());
  }
  const double width =
      0.5 * std::min(scale / std::sqrt(1.0 + spec_.n), 3.0 / (1.0 + rate));
  return std::clamp(static_cast<int>(std::ceil(2.0 * L / width)), 16, 4096);
}

double pt_norm_contour_offset(const Wavefunction& psi) {
  const double saddle = psi.stationary_contour_offset();
  if (saddle == 0.0) return 0.0;
  // Roundoff in the sum scales with max |psi^2| on the line, so take the
  // line between the real axis and the saddle with the smallest peak.
  const double L = psi.support_half_width();
  constexpr int kLines = 20;
  constexpr int kSamples = 400;
  double best = 0.0;
  double best_peak = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kLines; ++k) {
    const double offset = saddle * k / kLines;
    double peak = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = -L + 2.0 * L * i / kSamples;
      peak = std::max(peak, std::norm(psi.continued(Complex(x, offset))));
    }
    if (peak < best_peak) {
      best_peak = peak;
      best = offset;
    }
  }
  return best;
}

QuadratureResult pt_norm(const Wavefunction& psi, bool real_axis) {
  const QuadratureRule rule = QuadratureRule::gauss_legendre(
      psi.support_half_width(), psi.quadrature_panels());
  const double offset = real_axis ? 0.0 : pt_norm_contour_offset(psi);
  if (offset != 0.0) {
    return quadrature_integrate(
        [&psi, offset](double x) {
          const Complex v = psi.continued(Complex(x, offset));
          return v * v;
        },
        rule);
  }
  return quadrature_integrate(
      [&psi](double x) {
        const Complex v = psi(x);
        return v * v;
      },
      rule);
}

double ode_relative_residual(const Wavefunction& psi, double x) {
  const Jet j = psi.jet(x);
  const double hb2 = psi.params().hbar * psi.params().hbar;
  const Complex v = effective_potential(psi.params(), psi.spec().energy, x);
  const Complex kinetic = -hb2 * j.second;
  const Complex potential = v * j.value;
  const double scale = std::abs(kinetic) + std::abs(potential);
  return scale > 0.0 ? std::abs(kinetic + potential) / scale : 0.0;
}

// ---------------------------------------------------------------------------
// Limits

namespace {

double nonrelativistic_excess(double mu, double omega, double xi, double c,
                              int n, double hbar) {
  const ModelParams p = linear_mass(mu, mu * omega, mu * xi / c, hbar, c);
  const double a = solve_leading_coefficient(p);
  const double e = bound_level(p, n).energy_plus;
  const double c2 = c * c;
  const double ratio = p.eta / p.lambda;
  const double excess_sq = mu * mu * c2 * c2 * ratio * ratio +
                           (a * a) / (p.lambda * p.lambda) * (2.0 * n + 1.0) *
                               hbar * c2 * a;
  return excess_sq / (e + mu * c2);
}

// Previous (parameter, deviation) of the same level; NaN when there is none.
struct PreviousPoint {
  double parameter = std::numeric_limits<double>::quiet_NaN();
  double deviation = std::numeric_limits<double>::quiet_NaN();
};

double empirical_order(double dev_prev, double dev, double param_prev,
                       double param) {
  if (!(dev_prev > 0.0) || !(dev > 0.0) || !std::isfinite(param_prev)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::log(dev_prev / dev) / std::log(std::abs(param_prev / param));
}

}  // namespace

LimitReport nonrelativistic_limit_check(double mu, double omega, double xi,
                                        std::span<const double> c_values,
                                        std::span<const int> levels,
                                        double hbar) {
  if (!(mu > 0.0) || !(omega > 0.0)) {
    throw InvalidParameter("nonrelativistic limit needs mu > 0 and omega > 0");
  }
  LimitReport report;
  for (int n : levels) {
    const double target = (n + 0.5) * hbar * omega;
    PreviousPoint prev;
    for (double c : c_values) {
      LimitRow row;
      row.parameter = c;
      row.n = n;
      row.value = nonrelativistic_excess(mu, omega, xi, c, n, hbar);
      row.target = target;
      row.deviation = std::abs(row.value - target);
      row.xi_shift = row.value - nonrelativistic_excess(mu, omega, 0.0, c, n, hbar);
      row.order = empirical_order(prev.deviation, row.deviation,
                                  1.0 / prev.parameter, 1.0 / c);
      report.rows.push_back(row);
      prev = {row.parameter, row.deviation};
    }
  }
  return report;
}

LimitReport alpha_limit_check(const ModelParams& params,
                              std::span<const double> alpha_values,
                              std::span<const int> levels, double x_extent,
                              int x_points) {
  if (x_points < 2) throw InvalidParameter("need at least two grid points");
  ModelParams linear = params;
  linear.model = Model::LinearMass;
  linear.validate();

  LimitReport report;
  for (int n : levels) {
    const SpectrumLevel reference = bound_level(linear, n);
    const Wavefunction reference_psi(linear, reference);
    PreviousPoint prev;
    for (double alpha : alpha_values) {
      ModelParams hyper = params;
      hyper.model = Model::HyperbolicMass;
      hyper.alpha = alpha;
      hyper.validate();
      LimitRow row;
      row.parameter = alpha;
      row.n = n;
      row.target = reference.energy_plus;
      const LevelBounds bounds = level_bounds(hyper);
      row.level_count = bounds.physical_level_count();
      if (n > bounds.n_max_physical) {
        row.admissible = false;
        row.value = row.deviation = row.order = row.wavefunction_deviation =
            std::numeric_limits<double>::quiet_NaN();
        report.rows.push_back(row);
        prev = {};
        continue;
      }
      const SpectrumLevel level = bound_level(hyper, n);
      row.value = level.energy_plus;
      row.deviation = std::abs(row.value - row.target);
      row.order = empirical_order(prev.deviation, row.deviation,
                                  prev.parameter, alpha);
      const Wavefunction psi(hyper, level);
      double worst = 0.0;
      for (int i = 0; i < x_points; ++i) {
        const double x = -x_extent + 2.0 * x_extent * i / (x_points - 1);
        worst = std::max(worst, std::abs(psi(x) - reference_psi(x)));
      }
      row.wavefunction_deviation = worst;
      report.rows.push_back(row);
      prev = {row.parameter, row.deviation};
    }
  }
  return report;
}

}  // namespace kgpt
