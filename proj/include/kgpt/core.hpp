#pragma once

// Model parameters and the Klein-Gordon -> zero-energy Schroedinger-like
// mapping. Both models use a null scalar potential; the effective potential is
//
//   V_E(x) = (1/c^2) [ (M(x) c^2)^2 - (E - V(x))^2 ]
//
// and the Klein-Gordon energies E are the real roots of eps_n(E) = 0, where
// eps_n(E) is the n-th eigenvalue of -hbar^2 d^2/dx^2 + V_E(x).

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace kgpt {

using Complex = std::complex<double>;

enum class Model {
  LinearMass,      // M = sqrt(mu^2 + (lambda/c)^2 x^2),  V = i c eta x
  HyperbolicMass,  // M = sqrt(mu^2 + (lambda/(alpha c))^2 tanh^2(alpha x)),
                   // V = i (c eta/alpha) tanh(alpha x)
};

std::string_view to_string(Model model) noexcept;

struct ModelParams {
  Model model = Model::LinearMass;
  double mu = 1.0;      // mass at the origin, >= 0
  double lambda = 1.0;  // mass-gradient strength, > 0
  double eta = 0.0;     // vector-potential strength, any real
  double alpha = 1.0;   // inverse length scale, > 0 (HyperbolicMass only)
  double hbar = 1.0;
  double c = 1.0;

  // Throws InvalidParameter when an invariant is violated.
  void validate() const;
};

ModelParams linear_mass(double mu, double lambda, double eta, double hbar = 1.0,
                        double c = 1.0);
ModelParams hyperbolic_mass(double mu, double lambda, double eta, double alpha,
                            double hbar = 1.0, double c = 1.0);

double mass_at(const ModelParams& params, double x);

Complex vector_potential_at(const ModelParams& params, double x);

/// Closed-form V_E(x) for the selected model (expanded form, no cancellation
/// between the mass and vector-potential squares).
Complex effective_potential(const ModelParams& params, double energy, double x);

/// V_E continued to complex z (analytic in z; Model II has poles where
/// cosh(alpha z) = 0).
Complex continued_effective_potential(const ModelParams& params, double energy,
                                      Complex z);

/// Generic assembly (1/c^2)[(M c^2 + S)^2 - (E - V)^2] with S = 0, built from
/// mass_at and vector_potential_at. Used to cross-check the closed forms.
Complex assembled_effective_potential(const ModelParams& params, double energy,
                                      double x);

struct EffectivePotentialSample {
  double x;
  Complex value;
  double energy;
};

std::vector<EffectivePotentialSample> sample_effective_potential(
    const ModelParams& params, double energy, std::span<const double> xs);

}  // namespace kgpt
