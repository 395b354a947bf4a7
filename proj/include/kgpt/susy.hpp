#pragma once

// Supersymmetric factorisation of -hbar^2 d^2/dx^2 + V_E(x) with the KG
// energy E frozen as a real parameter.
//
//   Model I : W(x; a) = a x + i eta E / (c a),                 f(a) = a
//   Model II: W(x; a) = (a/alpha) tanh(alpha x) + i eta E/(c a), f(a) = a - hbar alpha^2
//
// The partner potentials V-/+ = W^2 -/+ hbar W' are shape invariant,
// V+(x; a_1) = V-(x; a_2) + R(a_1), so eps_n = eps_0 + sum_{k=1..n} R(a_k).

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgpt/core.hpp"

namespace kgpt {

struct SuperpotentialDescriptor {
  ModelParams params;
  double energy = 0.0;
  // Current shape parameter a_k. For the descriptor returned by
  // make_superpotential this is a_1 (A for Model I, B for Model II).
  double coefficient = 0.0;

  SuperpotentialDescriptor with_coefficient(double a) const {
    SuperpotentialDescriptor d = *this;
    d.coefficient = a;
    return d;
  }
};

/// A = sqrt(lambda^2 + eta^2) (Model I) or
/// B = sqrt(lambda^2 + eta^2 + hbar^2 alpha^4 / 4) - hbar alpha^2 / 2 (Model II).
double solve_leading_coefficient(const ModelParams& params);

/// Descriptor at a_1 for the given frozen energy.
SuperpotentialDescriptor make_superpotential(const ModelParams& params,
                                             double energy);

Complex superpotential_at(const SuperpotentialDescriptor& desc, double x);
Complex superpotential_derivative(const SuperpotentialDescriptor& desc,
                                  double x);

struct PartnerPair {
  Complex minus;  // W^2 - hbar W'
  Complex plus;   // W^2 + hbar W'
};

PartnerPair partner_potentials(const SuperpotentialDescriptor& desc, double x);

/// Parameter map f.
double next_parameter(const ModelParams& params, double a);

/// Remainder R(a) = V+(x; a) - V-(x; f(a)), independent of x.
double remainder(const SuperpotentialDescriptor& desc, double a);

struct ShapeInvarianceLedger {
  std::vector<double> parameters;  // a_1 ... a_{n+1}
  std::vector<double> remainders;  // R(a_1) ... R(a_n)
  std::string parameter_map;
};

ShapeInvarianceLedger shape_invariance_ledger(
    const SuperpotentialDescriptor& desc, int n);

struct ShapeInvarianceReport {
  double a1 = 0.0;
  double a2 = 0.0;
  double remainder = 0.0;
  double max_deviation = 0.0;
  double worst_x = 0.0;
  std::size_t samples = 0;
};

/// Checks |V+(x; a_1) - V-(x; a_2) - R(a_1)| <= tol at every sample.
/// a2_override replaces the model's parameter map (negative controls).
/// Throws ShapeInvarianceViolation.
ShapeInvarianceReport verify_shape_invariance(
    const SuperpotentialDescriptor& desc, std::span<const double> samples,
    double tol = 1e-10, std::optional<double> a2_override = std::nullopt);

/// Ground-state eigenvalue eps_0(E) of -hbar^2 d^2/dx^2 + V_E.
double ground_epsilon(const SuperpotentialDescriptor& desc);

struct EpsilonLevel {
  int n = 0;
  double epsilon = 0.0;        // eps_n
  double epsilon_minus = 0.0;  // eps_n^(-) = eps_n - eps_0
};

struct EpsilonSpectrum {
  double energy = 0.0;
  std::vector<EpsilonLevel> levels;
  std::optional<int> cap;  // largest admissible n, if the spectrum is finite
  bool truncated = false;  // request exceeded the cap
};

/// Accumulates eps_n = eps_0 + sum R(a_k) for 0 <= n <= n_max_request
/// (clipped to the normalisable range for Model II).
EpsilonSpectrum epsilon_spectrum(const SuperpotentialDescriptor& desc,
                                 int n_max_request);

/// Telescoped closed form of eps_n(E); used as an independent cross-check of
/// the accumulated chain.
double epsilon_closed_form(const ModelParams& params, int n, double energy);

/// Largest n with a normalisable eigenfunction of V_E; nullopt for Model I.
std::optional<int> epsilon_cap(const ModelParams& params);

// A function together with its first two x-derivatives.
struct Jet {
  Complex value;
  Complex first;
  Complex second;
};

using LocalFunction = std::function<Jet(double)>;

/// Unnormalised exp(-(1/hbar) int W) at the descriptor's coefficient.
Jet ground_state(const SuperpotentialDescriptor& desc, double x);

/// (-hbar d/dx + W(x; a)) psi. Maps an eigenfunction at f(a) to one at a.
std::function<Complex(double)> apply_raising_operator(
    const SuperpotentialDescriptor& desc, LocalFunction psi);

/// (hbar d/dx + W(x; a)) psi. Annihilates the ground state at a.
std::function<Complex(double)> apply_lowering_operator(
    const SuperpotentialDescriptor& desc, LocalFunction psi);

}  // namespace kgpt
