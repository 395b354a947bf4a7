#pragma once

// End-to-end cross-checks of the closed forms against the independent
// numerical routes, as run by `kgpt verify`.

#include <string>
#include <vector>

#include "kgpt/core.hpp"

namespace kgpt {

struct VerifyOptions {
  int max_level = 3;        // levels 0..max_level (clipped to the admissible set)
  int num_points = 801;     // grid size for the eigensolve and residual checks
  double half_width = 0.0;  // <= 0: default_half_width
  int shape_samples = 50;
  double shape_tolerance = 1e-10;
  double norm_tolerance = 1e-7;
  double conjugacy_tolerance = 1e-10;
  double root_tolerance = 1e-10;       // closed-form quantization root, relative
  double grid_root_tolerance = 1e-3;   // floor of the grid-root tolerance, relative
  double reality_tolerance = 1e-6;     // max |Im eps| of the grid spectrum
  double order_target = 2.0;
  double order_window = 0.2;
  int grid_root_levels = 2;            // grid root finding is the slow check
  // Sample V_E on the contour through its complex stationary point (Model I).
  // On the real axis the grid eigenvalues have condition number
  // ~exp(A delta^2 / hbar), delta = eta E/(c A^2), which swamps the reality
  // check once |eta| E is large.
  bool stationary_contour = true;
  // Relative shift applied to E_n before the residual check; a negative
  // control that should make the residual stop converging.
  double energy_perturbation = 0.0;
};

struct CheckResult {
  std::string name;
  int level = -1;  // -1 for checks that are not tied to one level
  bool passed = false;
  bool skipped = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerificationReport {
  ModelParams params;
  int physical_levels = 0;  // levels examined
  std::vector<CheckResult> checks;

  bool passed() const;
  // First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

VerificationReport run_verification(const ModelParams& params,
                                    const VerifyOptions& options = {});

}  // namespace kgpt
