#pragma once

// Closed-form Klein-Gordon bound states for both models.

#include <span>
#include <vector>

#include "kgpt/core.hpp"
#include "kgpt/specfun.hpp"
#include "kgpt/susy.hpp"

namespace kgpt {

enum class Branch { Plus, Minus };

struct SpectrumLevel {
  int n = 0;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  Model model = Model::LinearMass;

  double energy(Branch b) const {
    return b == Branch::Plus ? energy_plus : energy_minus;
  }
};

struct LevelBounds {
  bool bounded = false;        // false: unlimited number of levels (Model I)
  int n_max_effective = -1;    // normalisability cap of the auxiliary problem
  int n_max_physical = -1;     // reality cap of the KG energies; -1 = none
  bool constraint_satisfied = true;  // lambda^2 > hbar alpha^2 |eta|

  int physical_level_count() const { return bounded ? n_max_physical + 1 : -1; }
};

struct Spectrum {
  Model model = Model::LinearMass;
  LevelBounds bounds;
  std::vector<SpectrumLevel> levels;
  std::vector<int> degenerate;  // levels dropped because 1 - eta^2/(B - n hbar alpha^2)^2 ~ 0
};

LevelBounds level_bounds(const ModelParams& params);

/// Levels 0..n_cutoff (clipped to the physical cap for Model II).
Spectrum bound_energies(const ModelParams& params, int n_cutoff);

/// Single level; throws InadmissibleLevel or DegenerateLevel.
SpectrumLevel bound_level(const ModelParams& params, int n);

/// Model I with mu = 0: E_n = +-(c/lambda) sqrt((2n+1) hbar A^3).
std::vector<SpectrumLevel> special_case_massless(const ModelParams& params,
                                                 int n_cutoff);

struct WavefunctionSpec {
  int n = 0;
  Model model = Model::LinearMass;
  SpectrumLevel level;
  Branch branch = Branch::Plus;
  double energy = 0.0;                   // branch energy used in the state
  double coefficient = 0.0;              // A or B
  double normalization_magnitude = 0.0;  // |N_n|
  double log_normalization = 0.0;
  int phase_quarter_turns = 0;           // phase e^{i n pi/2} stored as n mod 4
  Complex center_shift;                  // Model I: i eta E / (c A^2)
  Complex exponent_a;                    // Model II: a_n
  Complex exponent_b;                    // Model II: b_n = conj(a_n)
};

class Wavefunction {
 public:
  Wavefunction(const ModelParams& params, const SpectrumLevel& level,
               Branch branch = Branch::Plus);

  static Wavefunction for_level(const ModelParams& params, int n,
                                Branch branch = Branch::Plus);

  const WavefunctionSpec& spec() const { return spec_; }
  const ModelParams& params() const { return params_; }

  Complex operator()(double x) const { return jet(x).value; }
  Jet jet(double x) const;

  // psi continued to complex z: entire for Model I, analytic in the strip
  // |Im alpha z| < pi/2 for Model II (throws InvalidParameter outside it).
  Complex continued(Complex z) const;

  // Imaginary offset of the line through the saddle of psi^2, where it
  // carries no oscillating factor: -Im(center shift) for Model I,
  // -atan(Im a_n / Re a_n)/alpha for Model II.
  double stationary_contour_offset() const;

  // Half-width beyond which |psi|^2 is negligible relative to its peak.
  double support_half_width() const;
  // Panel count for a 32-point composite Gauss-Legendre rule on the support.
  int quadrature_panels() const;

 private:
  Jet jet_linear(Complex z) const;
  Jet jet_hyperbolic(double x) const;
  Complex value_hyperbolic(Complex z) const;

  ModelParams params_;
  WavefunctionSpec spec_;
};

/// PT norm int psi^2 dx, which should equal (-1)^n.
/// On the real axis psi^2 oscillates once eta E != 0 while its integral stays
/// O(1), so the real-line sum loses digits to cancellation (for Model I the
/// integrand reaches ~exp(A delta^2/hbar), delta the complex centre shift).
/// psi^2 is analytic and decays between the real axis and the line
/// Im x = stationary_contour_offset(), so the integral is taken on the line
/// in that band with the smallest max |psi^2| (pt_norm_contour_offset);
/// pass real_axis = true to force the literal real-line rule.
QuadratureResult pt_norm(const Wavefunction& psi, bool real_axis = false);

/// Imaginary offset used by pt_norm: among 21 equally spaced lines from the
/// real axis to stationary_contour_offset(), the one with the smallest
/// sampled max |psi^2|.
double pt_norm_contour_offset(const Wavefunction& psi);

/// Pointwise relative residual |-hbar^2 psi'' + V_E psi| / (|hbar^2 psi''| + |V_E psi|)
/// with analytic derivatives at E = E_n.
double ode_relative_residual(const Wavefunction& psi, double x);

struct LimitRow {
  double parameter = 0.0;  // c or alpha
  int n = 0;
  double value = 0.0;      // E_n - mu c^2, or the Model II energy
  double target = 0.0;     // (n + 1/2) hbar omega, or the Model I energy
  double deviation = 0.0;
  double order = 0.0;      // empirical order against the previous row of the same n; NaN for the first
  double xi_shift = 0.0;   // nonrelativistic study: value(xi) - value(xi = 0)
  double wavefunction_deviation = 0.0;  // alpha study: max |Psi_n - psi_n^I| on the grid
  int level_count = 0;     // alpha study: admissible levels at this alpha
  bool admissible = true;
};

struct LimitReport {
  std::vector<LimitRow> rows;
};

/// lambda = mu omega, eta = mu xi / c, + branch. E_n - mu c^2 is evaluated as
/// (E^2 - mu^2 c^4)/(E + mu c^2) to avoid cancellation at large c.
LimitReport nonrelativistic_limit_check(double mu, double omega, double xi,
                                        std::span<const double> c_values,
                                        std::span<const int> levels,
                                        double hbar = 1.0);

/// Model II energies and wavefunctions against Model I with the same
/// mu, lambda, eta, hbar, c. Wavefunction deviation is measured on
/// x_points equally spaced points of [-x_extent, x_extent].
LimitReport alpha_limit_check(const ModelParams& params,
                              std::span<const double> alpha_values,
                              std::span<const int> levels,
                              double x_extent = 6.0, int x_points = 241);

}  // namespace kgpt
