#include "kgpt/susy.hpp"

#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "kgpt/errors.hpp"

namespace kgpt {

namespace {

bool is_linear(const ModelParams& p) { return p.model == Model::LinearMass; }

// Constant part g(a) = a^2/alpha^2 - eta^2 E^2 / (c^2 a^2) of the Model II
// partner potentials; R(a) = g(a) - g(f(a)).
double hyperbolic_constant(const SuperpotentialDescriptor& d, double a) {
  const ModelParams& p = d.params;
  const double shift = p.eta * d.energy / p.c;
  if (a == 0.0 && shift != 0.0) {
    throw InvalidParameter("shape parameter a = 0 is outside the chain");
  }
  const double tail = shift == 0.0 ? 0.0 : shift * shift / (a * a);
  return a * a / (p.alpha * p.alpha) - tail;
}

Complex imaginary_offset(const SuperpotentialDescriptor& d) {
  const ModelParams& p = d.params;
  const double shift = p.eta * d.energy / p.c;
  if (shift == 0.0) return 0.0;
  return {0.0, shift / d.coefficient};
}

}  // namespace

double solve_leading_coefficient(const ModelParams& p) {
  p.validate();
  const double coupling = p.lambda * p.lambda + p.eta * p.eta;
  if (is_linear(p)) return std::sqrt(coupling);
  const double h = p.hbar * p.alpha * p.alpha;
  return std::sqrt(coupling + 0.25 * h * h) - 0.5 * h;
}

SuperpotentialDescriptor make_superpotential(const ModelParams& params,
                                             double energy) {
  detail::require_finite(energy, "energy");
  SuperpotentialDescriptor d;
  d.params = params;
  d.energy = energy;
  d.coefficient = solve_leading_coefficient(params);

  const double coupling = params.lambda * params.lambda + params.eta * params.eta;
  const double a = d.coefficient;
  const double lhs = is_linear(params)
                         ? a * a
                         : a * (a + params.hbar * params.alpha * params.alpha);
  if (!(a > 0.0) || std::abs(lhs - coupling) > 1e-12 * std::max(1.0, coupling)) {
    throw InvalidParameter("leading coefficient violates its defining relation");
  }
  return d;
}

Complex superpotential_at(const SuperpotentialDescriptor& d, double x) {
  const ModelParams& p = d.params;
  const double a = d.coefficient;
  const double real = is_linear(p) ? a * x : a / p.alpha * std::tanh(p.alpha * x);
  return Complex(real, 0.0) + imaginary_offset(d);
}

Complex superpotential_derivative(const SuperpotentialDescriptor& d, double x) {
  const ModelParams& p = d.params;
  if (is_linear(p)) return d.coefficient;
  return d.coefficient * detail::sech_squared(p.alpha * x);
}

PartnerPair partner_potentials(const SuperpotentialDescriptor& d, double x) {
  const Complex w = superpotential_at(d, x);
  const Complex dw = d.params.hbar * superpotential_derivative(d, x);
  const Complex w2 = w * w;
  return {w2 - dw, w2 + dw};
}

double next_parameter(const ModelParams& p, double a) {
  return is_linear(p) ? a : a - p.hbar * p.alpha * p.alpha;
}

double remainder(const SuperpotentialDescriptor& d, double a) {
  if (is_linear(d.params)) return 2.0 * d.params.hbar * a;
  return hyperbolic_constant(d, a) -
         hyperbolic_constant(d, next_parameter(d.params, a));
}

ShapeInvarianceLedger shape_invariance_ledger(const SuperpotentialDescriptor& d,
                                              int n) {
  if (n < 0) throw InvalidParameter("ledger length must be >= 0");
  ShapeInvarianceLedger ledger;
  ledger.parameter_map = is_linear(d.params) ? "a_{k+1} = a_k"
                                             : "a_{k+1} = a_k - hbar*alpha^2";
  double a = d.coefficient;
  ledger.parameters.push_back(a);
  for (int k = 1; k <= n; ++k) {
    ledger.remainders.push_back(remainder(d, a));
    a = next_parameter(d.params, a);
    ledger.parameters.push_back(a);
  }
  return ledger;
}

ShapeInvarianceReport verify_shape_invariance(
    const SuperpotentialDescriptor& d, std::span<const double> samples,
    double tol, std::optional<double> a2_override) {
  if (samples.empty()) {
    throw InvalidParameter("shape-invariance check needs at least one sample");
  }
  ShapeInvarianceReport report;
  report.a1 = d.coefficient;
  report.a2 = a2_override.value_or(next_parameter(d.params, d.coefficient));
  report.remainder = remainder(d, d.coefficient);
  report.samples = samples.size();
  const SuperpotentialDescriptor shifted = d.with_coefficient(report.a2);
  for (double x : samples) {
    const Complex lhs = partner_potentials(d, x).plus;
    const Complex rhs = partner_potentials(shifted, x).minus + report.remainder;
    const double dev = std::abs(lhs - rhs);
    if (dev > report.max_deviation || !std::isfinite(dev)) {
      report.max_deviation = dev;
      report.worst_x = x;
    }
  }
  if (!(report.max_deviation <= tol)) {
    std::ostringstream msg;
    msg << "shape invariance violated: max deviation " << report.max_deviation
        << " at x = " << report.worst_x << " (a1 = " << report.a1
        << ", a2 = " << report.a2 << ", tol = " << tol << ")";
    throw ShapeInvarianceViolation(msg.str());
  }
  return report;
}

double ground_epsilon(const SuperpotentialDescriptor& d) {
  const ModelParams& p = d.params;
  const double a = d.coefficient;
  const double c2 = p.c * p.c;
  const double offset = p.mu * p.mu * c2 - d.energy * d.energy / c2;
  if (is_linear(p)) {
    const double tail = p.eta * p.eta * d.energy * d.energy / (c2 * a * a);
    return offset + tail + p.hbar * a;
  }
  const double coupling = p.lambda * p.lambda + p.eta * p.eta;
  return -hyperbolic_constant(d, a) + coupling / (p.alpha * p.alpha) + offset;
}

std::optional<int> epsilon_cap(const ModelParams& p) {
  if (is_linear(p)) return std::nullopt;
  const double b = solve_leading_coefficient(p);
  return detail::largest_integer_below(b / (p.hbar * p.alpha * p.alpha));
}

EpsilonSpectrum epsilon_spectrum(const SuperpotentialDescriptor& d,
                                 int n_max_request) {
  if (n_max_request < 0) throw InvalidParameter("n_max_request must be >= 0");
  EpsilonSpectrum out;
  out.energy = d.energy;
  out.cap = epsilon_cap(d.params);
  int last = n_max_request;
  if (out.cap && *out.cap < last) {
    last = *out.cap;
    out.truncated = true;
  }
  const double eps0 = ground_epsilon(d);
  double accumulated = 0.0;
  double a = d.coefficient;
  for (int n = 0; n <= last; ++n) {
    if (n > 0) {
      accumulated += remainder(d, a);
      a = next_parameter(d.params, a);
    }
    out.levels.push_back({n, eps0 + accumulated, accumulated});
  }
  return out;
}

double epsilon_closed_form(const ModelParams& p, int n, double energy) {
  if (n < 0) throw InvalidParameter("level index must be >= 0");
  detail::require_finite(energy, "energy");
  const double a1 = solve_leading_coefficient(p);
  const double c2 = p.c * p.c;
  const double offset = p.mu * p.mu * c2 - energy * energy / c2;
  if (is_linear(p)) {
    return p.mu * p.mu * c2 + (2.0 * n + 1.0) * p.hbar * a1 -
           p.lambda * p.lambda * energy * energy / (c2 * a1 * a1);
  }
  const auto cap = epsilon_cap(p);
  if (n > *cap) {
    std::ostringstream msg;
    msg << "level n = " << n << " exceeds the normalisable range n <= " << *cap;
    throw InadmissibleLevel(msg.str());
  }
  const double h = p.hbar * p.alpha * p.alpha;
  const double an = a1 - n * h;
  const double a2 = p.alpha * p.alpha;
  const double shift = p.eta * energy / p.c;
  return a1 * (a1 + h) / a2 + offset - (an * an / a2 - shift * shift / (an * an));
}

Jet ground_state(const SuperpotentialDescriptor& d, double x) {
  const ModelParams& p = d.params;
  const double a = d.coefficient;
  const double phase_rate = p.eta * d.energy / (p.hbar * p.c * a);
  double log_magnitude = 0.0;
  if (is_linear(p)) {
    log_magnitude = -0.5 * a * x * x / p.hbar;
  } else {
    log_magnitude =
        -a / (p.hbar * p.alpha * p.alpha) * detail::log_cosh(p.alpha * x);
  }
  const Complex value = std::exp(Complex(log_magnitude, -phase_rate * x));
  const Complex w = superpotential_at(d, x);
  const Complex dw = superpotential_derivative(d, x);
  const double hb = p.hbar;
  return {value, -w / hb * value, (w * w / (hb * hb) - dw / hb) * value};
}

std::function<Complex(double)> apply_raising_operator(
    const SuperpotentialDescriptor& d, LocalFunction psi) {
  return [d, psi = std::move(psi)](double x) {
    const Jet j = psi(x);
    return -d.params.hbar * j.first + superpotential_at(d, x) * j.value;
  };
}

std::function<Complex(double)> apply_lowering_operator(
    const SuperpotentialDescriptor& d, LocalFunction psi) {
  return [d, psi = std::move(psi)](double x) {
    const Jet j = psi(x);
    return d.params.hbar * j.first + superpotential_at(d, x) * j.value;
  };
}

}  // namespace kgpt
