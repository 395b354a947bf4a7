#include "kgpt/core.hpp"

#include <cmath>
#include <string>

#include "detail.hpp"
#include "kgpt/errors.hpp"

namespace kgpt {

std::string_view to_string(Model model) noexcept {
  return model == Model::LinearMass ? "linear" : "hyperbolic";
}

void ModelParams::validate() const {
  detail::require_finite(mu, "mu");
  detail::require_finite(lambda, "lambda");
  detail::require_finite(eta, "eta");
  detail::require_finite(hbar, "hbar");
  detail::require_finite(c, "c");
  if (mu < 0.0) throw InvalidParameter("mu must be >= 0");
  if (lambda <= 0.0) throw InvalidParameter("lambda must be > 0");
  if (hbar <= 0.0) throw InvalidParameter("hbar must be > 0");
  if (c <= 0.0) throw InvalidParameter("c must be > 0");
  if (model == Model::HyperbolicMass) {
    detail::require_finite(alpha, "alpha");
    if (alpha <= 0.0) throw InvalidParameter("alpha must be > 0");
  }
}

ModelParams linear_mass(double mu, double lambda, double eta, double hbar,
                        double c) {
  ModelParams p;
  p.model = Model::LinearMass;
  p.mu = mu;
  p.lambda = lambda;
  p.eta = eta;
  p.hbar = hbar;
  p.c = c;
  p.validate();
  return p;
}

ModelParams hyperbolic_mass(double mu, double lambda, double eta, double alpha,
                            double hbar, double c) {
  ModelParams p;
  p.model = Model::HyperbolicMass;
  p.mu = mu;
  p.lambda = lambda;
  p.eta = eta;
  p.alpha = alpha;
  p.hbar = hbar;
  p.c = c;
  p.validate();
  return p;
}

double mass_at(const ModelParams& p, double x) {
  detail::require_finite(x, "x");
  double profile = 0.0;  // (lambda/c) * g(x)
  if (p.model == Model::LinearMass) {
    profile = p.lambda / p.c * x;
  } else {
    profile = p.lambda / (p.alpha * p.c) * std::tanh(p.alpha * x);
  }
  return std::hypot(p.mu, profile);
}

Complex vector_potential_at(const ModelParams& p, double x) {
  detail::require_finite(x, "x");
  if (p.model == Model::LinearMass) {
    return {0.0, p.c * p.eta * x};
  }
  return {0.0, p.c * p.eta / p.alpha * std::tanh(p.alpha * x)};
}

Complex effective_potential(const ModelParams& p, double energy, double x) {
  detail::require_finite(x, "x");
  detail::require_finite(energy, "energy");
  const double coupling = p.lambda * p.lambda + p.eta * p.eta;
  const double offset = p.mu * p.mu * p.c * p.c - energy * energy / (p.c * p.c);
  if (p.model == Model::LinearMass) {
    return detail::checked(
        {coupling * x * x + offset, 2.0 * p.eta * energy / p.c * x},
        "effective_potential");
  }
  const double a2 = p.alpha * p.alpha;
  const double y = p.alpha * x;
  const double re = coupling / a2 * (1.0 - detail::sech_squared(y)) + offset;
  const double im = 2.0 * p.eta * energy / (p.alpha * p.c) * std::tanh(y);
  return detail::checked({re, im}, "effective_potential");
}

Complex continued_effective_potential(const ModelParams& p, double energy,
                                      Complex z) {
  detail::require_finite(energy, "energy");
  const double coupling = p.lambda * p.lambda + p.eta * p.eta;
  const double offset = p.mu * p.mu * p.c * p.c - energy * energy / (p.c * p.c);
  const Complex drift(0.0, 2.0 * p.eta * energy / p.c);
  if (p.model == Model::LinearMass) {
    return detail::checked(coupling * z * z + drift * z + offset,
                           "continued_effective_potential");
  }
  const Complex t = std::tanh(p.alpha * z);
  return detail::checked(coupling / (p.alpha * p.alpha) * t * t +
                             drift / p.alpha * t + offset,
                         "continued_effective_potential");
}

Complex assembled_effective_potential(const ModelParams& p, double energy,
                                      double x) {
  detail::require_finite(energy, "energy");
  const double c2 = p.c * p.c;
  const double scalar = 0.0;
  const double rest = mass_at(p, x) * c2 + scalar;
  const Complex kinetic = Complex(energy, 0.0) - vector_potential_at(p, x);
  return detail::checked((rest * rest - kinetic * kinetic) / c2,
                         "assembled_effective_potential");
}

std::vector<EffectivePotentialSample> sample_effective_potential(
    const ModelParams& params, double energy, std::span<const double> xs) {
  std::vector<EffectivePotentialSample> out;
  out.reserve(xs.size());
  for (double x : xs) {
    out.push_back({x, effective_potential(params, energy, x), energy});
  }
  return out;
}

}  // namespace kgpt
