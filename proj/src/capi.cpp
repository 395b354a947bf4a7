#include "kgpt/kgpt.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "kgpt/analytic.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/oracle.hpp"
#include "kgpt/susy.hpp"
#include "kgpt/verify.hpp"

struct kgpt_model {
  kgpt::ModelParams params;
};

struct kgpt_spectrum {
  kgpt::Spectrum spectrum;
};

struct kgpt_wavefunction {
  kgpt::Wavefunction psi;
};

struct kgpt_report {
  kgpt::VerificationReport report;
};

struct kgpt_limits {
  kgpt::LimitReport report;
};

namespace {

thread_local std::string last_error;

kgpt_status status_of(kgpt::ErrorCode code) {
  using kgpt::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParameter: return KGPT_ERR_INVALID_PARAMETER;
    case ErrorCode::InadmissibleLevel: return KGPT_ERR_INADMISSIBLE_LEVEL;
    case ErrorCode::DegenerateLevel: return KGPT_ERR_DEGENERATE_LEVEL;
    case ErrorCode::NoSignChange: return KGPT_ERR_NO_SIGN_CHANGE;
    case ErrorCode::ConvergenceFailure: return KGPT_ERR_CONVERGENCE;
    case ErrorCode::PoleError: return KGPT_ERR_POLE;
    case ErrorCode::RecurrenceBreakdown: return KGPT_ERR_RECURRENCE;
    case ErrorCode::ShapeInvarianceViolation: return KGPT_ERR_SHAPE_INVARIANCE;
  }
  return KGPT_ERR_INTERNAL;
}

kgpt_status fail(kgpt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
kgpt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return KGPT_OK;
  } catch (const kgpt::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KGPT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KGPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KGPT_ERR_INTERNAL, "unknown error");
  }
}

kgpt::ModelParams to_params(const kgpt_params& p) {
  kgpt::ModelParams out;
  switch (p.model) {
    case KGPT_MODEL_LINEAR: out.model = kgpt::Model::LinearMass; break;
    case KGPT_MODEL_HYPERBOLIC: out.model = kgpt::Model::HyperbolicMass; break;
    default: throw kgpt::InvalidParameter("unknown model kind");
  }
  out.mu = p.mu;
  out.lambda = p.lambda;
  out.eta = p.eta;
  out.alpha = p.alpha;
  out.hbar = p.hbar;
  out.c = p.c;
  out.validate();
  return out;
}

kgpt_params from_params(const kgpt::ModelParams& p) {
  return {p.model == kgpt::Model::LinearMass ? KGPT_MODEL_LINEAR : KGPT_MODEL_HYPERBOLIC,
          p.mu, p.lambda, p.eta, p.alpha, p.hbar, p.c};
}

kgpt_bounds from_bounds(const kgpt::LevelBounds& b) {
  return {b.bounded ? 1 : 0, b.n_max_effective, b.n_max_physical,
          b.constraint_satisfied ? 1 : 0};
}

kgpt_level from_level(const kgpt::SpectrumLevel& l) {
  return {l.n, l.energy_plus, l.energy_minus};
}

#define KGPT_REQUIRE(ptr)                                                  \
  do {                                                                     \
    if ((ptr) == nullptr) {                                                \
      return fail(KGPT_ERR_NULL_ARGUMENT, #ptr " must not be null");       \
    }                                                                      \
  } while (0)

}  // namespace

extern "C" {

const char* kgpt_version(void) { return KGPT_VERSION_STRING; }

const char* kgpt_status_string(kgpt_status status) {
  switch (status) {
    case KGPT_OK: return "ok";
    case KGPT_ERR_INVALID_PARAMETER: return "invalid parameter";
    case KGPT_ERR_INADMISSIBLE_LEVEL: return "inadmissible level";
    case KGPT_ERR_DEGENERATE_LEVEL: return "degenerate level";
    case KGPT_ERR_NO_SIGN_CHANGE: return "no sign change";
    case KGPT_ERR_CONVERGENCE: return "convergence failure";
    case KGPT_ERR_POLE: return "pole";
    case KGPT_ERR_RECURRENCE: return "recurrence breakdown";
    case KGPT_ERR_SHAPE_INVARIANCE: return "shape invariance violation";
    case KGPT_ERR_NULL_ARGUMENT: return "null argument";
    case KGPT_ERR_OUT_OF_RANGE: return "index out of range";
    case KGPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* kgpt_last_error_message(void) { return last_error.c_str(); }

kgpt_params kgpt_default_params(kgpt_model_kind model) {
  return {model, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0};
}

kgpt_status kgpt_model_create(const kgpt_params* params, kgpt_model** out) {
  KGPT_REQUIRE(params);
  KGPT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new kgpt_model{to_params(*params)}; });
}

void kgpt_model_destroy(kgpt_model* model) { delete model; }

kgpt_status kgpt_model_get_params(const kgpt_model* model, kgpt_params* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  *out = from_params(model->params);
  return KGPT_OK;
}

kgpt_status kgpt_model_bounds(const kgpt_model* model, kgpt_bounds* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  return guarded([&] { *out = from_bounds(kgpt::level_bounds(model->params)); });
}

kgpt_status kgpt_model_leading_coefficient(const kgpt_model* model, double* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  return guarded([&] { *out = kgpt::solve_leading_coefficient(model->params); });
}

kgpt_status kgpt_model_effective_potential(const kgpt_model* model, double energy,
                                           double x, double* re, double* im) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(re);
  KGPT_REQUIRE(im);
  return guarded([&] {
    const kgpt::Complex v = kgpt::effective_potential(model->params, energy, x);
    *re = v.real();
    *im = v.imag();
  });
}

kgpt_status kgpt_model_epsilon(const kgpt_model* model, int n, double energy,
                               double* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  return guarded(
      [&] { *out = kgpt::epsilon_closed_form(model->params, n, energy); });
}

kgpt_status kgpt_model_level(const kgpt_model* model, int n, kgpt_level* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  return guarded([&] { *out = from_level(kgpt::bound_level(model->params, n)); });
}

kgpt_status kgpt_model_quantization_root(const kgpt_model* model, int n, double lo,
                                         double hi, int grid_points, double* out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  return guarded([&] {
    kgpt::GridOptions grid;
    kgpt::EpsilonSource source = kgpt::EpsilonSource::ClosedForm;
    if (grid_points > 0) {
      source = kgpt::EpsilonSource::Grid;
      grid.num_points = grid_points;
      grid.stationary_contour = true;
    }
    *out = kgpt::quantization_root(model->params, n, lo, hi, source, grid);
  });
}

kgpt_status kgpt_spectrum_compute(const kgpt_model* model, int n_cutoff,
                                  kgpt_spectrum** out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new kgpt_spectrum{kgpt::bound_energies(model->params, n_cutoff)};
  });
}

void kgpt_spectrum_destroy(kgpt_spectrum* spectrum) { delete spectrum; }

size_t kgpt_spectrum_size(const kgpt_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.levels.size() : 0;
}

kgpt_status kgpt_spectrum_level(const kgpt_spectrum* spectrum, size_t i,
                                kgpt_level* out) {
  KGPT_REQUIRE(spectrum);
  KGPT_REQUIRE(out);
  if (i >= spectrum->spectrum.levels.size()) {
    return fail(KGPT_ERR_OUT_OF_RANGE, "spectrum index out of range");
  }
  *out = from_level(spectrum->spectrum.levels[i]);
  return KGPT_OK;
}

kgpt_status kgpt_spectrum_bounds(const kgpt_spectrum* spectrum, kgpt_bounds* out) {
  KGPT_REQUIRE(spectrum);
  KGPT_REQUIRE(out);
  *out = from_bounds(spectrum->spectrum.bounds);
  return KGPT_OK;
}

size_t kgpt_spectrum_degenerate_count(const kgpt_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.degenerate.size() : 0;
}

kgpt_status kgpt_spectrum_degenerate(const kgpt_spectrum* spectrum, size_t i,
                                     int* n) {
  KGPT_REQUIRE(spectrum);
  KGPT_REQUIRE(n);
  if (i >= spectrum->spectrum.degenerate.size()) {
    return fail(KGPT_ERR_OUT_OF_RANGE, "degenerate index out of range");
  }
  *n = spectrum->spectrum.degenerate[i];
  return KGPT_OK;
}

kgpt_status kgpt_wavefunction_create(const kgpt_model* model, int n,
                                     kgpt_branch branch, kgpt_wavefunction** out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  *out = nullptr;
  if (branch != KGPT_BRANCH_PLUS && branch != KGPT_BRANCH_MINUS) {
    return fail(KGPT_ERR_INVALID_PARAMETER, "unknown branch");
  }
  return guarded([&] {
    const kgpt::Branch b =
        branch == KGPT_BRANCH_PLUS ? kgpt::Branch::Plus : kgpt::Branch::Minus;
    *out = new kgpt_wavefunction{
        kgpt::Wavefunction::for_level(model->params, n, b)};
  });
}

void kgpt_wavefunction_destroy(kgpt_wavefunction* wf) { delete wf; }

kgpt_status kgpt_wavefunction_get_info(const kgpt_wavefunction* wf,
                                       kgpt_wavefunction_info* out) {
  KGPT_REQUIRE(wf);
  KGPT_REQUIRE(out);
  const kgpt::WavefunctionSpec& s = wf->psi.spec();
  out->n = s.n;
  out->branch = s.branch == kgpt::Branch::Plus ? KGPT_BRANCH_PLUS : KGPT_BRANCH_MINUS;
  out->energy = s.energy;
  out->coefficient = s.coefficient;
  out->normalization_magnitude = s.normalization_magnitude;
  out->log_normalization = s.log_normalization;
  out->phase_quarter_turns = s.phase_quarter_turns;
  out->center_shift_re = s.center_shift.real();
  out->center_shift_im = s.center_shift.imag();
  out->exponent_a_re = s.exponent_a.real();
  out->exponent_a_im = s.exponent_a.imag();
  out->exponent_b_re = s.exponent_b.real();
  out->exponent_b_im = s.exponent_b.imag();
  out->support_half_width = wf->psi.support_half_width();
  return KGPT_OK;
}

kgpt_status kgpt_wavefunction_eval(const kgpt_wavefunction* wf, const double* xs,
                                   size_t count, double* re, double* im) {
  KGPT_REQUIRE(wf);
  if (count == 0) return KGPT_OK;
  KGPT_REQUIRE(xs);
  KGPT_REQUIRE(re);
  KGPT_REQUIRE(im);
  return guarded([&] {
    for (size_t i = 0; i < count; ++i) {
      const kgpt::Complex v = wf->psi(xs[i]);
      re[i] = v.real();
      im[i] = v.imag();
    }
  });
}

kgpt_status kgpt_wavefunction_pt_norm(const kgpt_wavefunction* wf, double* re,
                                      double* im, double* edge_ratio) {
  KGPT_REQUIRE(wf);
  KGPT_REQUIRE(re);
  KGPT_REQUIRE(im);
  return guarded([&] {
    const kgpt::QuadratureResult r = kgpt::pt_norm(wf->psi);
    *re = r.value.real();
    *im = r.value.imag();
    if (edge_ratio) *edge_ratio = r.edge_ratio;
  });
}

kgpt_verify_options kgpt_default_verify_options(void) {
  const kgpt::VerifyOptions d;
  return {d.max_level, d.num_points, d.half_width, d.energy_perturbation,
          d.stationary_contour ? 1 : 0};
}

kgpt_status kgpt_verify_run(const kgpt_model* model,
                            const kgpt_verify_options* options, kgpt_report** out) {
  KGPT_REQUIRE(model);
  KGPT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    kgpt::VerifyOptions o;
    if (options) {
      o.max_level = options->max_level;
      o.num_points = options->num_points;
      o.half_width = options->half_width;
      o.energy_perturbation = options->energy_perturbation;
      o.stationary_contour = options->stationary_contour != 0;
    }
    *out = new kgpt_report{kgpt::run_verification(model->params, o)};
  });
}

void kgpt_report_destroy(kgpt_report* report) { delete report; }

int kgpt_report_passed(const kgpt_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

int kgpt_report_physical_levels(const kgpt_report* report) {
  return report ? report->report.physical_levels : 0;
}

size_t kgpt_report_size(const kgpt_report* report) {
  return report ? report->report.checks.size() : 0;
}

kgpt_status kgpt_report_check(const kgpt_report* report, size_t i, kgpt_check* out) {
  KGPT_REQUIRE(report);
  KGPT_REQUIRE(out);
  if (i >= report->report.checks.size()) {
    return fail(KGPT_ERR_OUT_OF_RANGE, "check index out of range");
  }
  const kgpt::CheckResult& c = report->report.checks[i];
  *out = {c.name.c_str(), c.detail.c_str(), c.level, c.passed ? 1 : 0,
          c.skipped ? 1 : 0, c.measured, c.tolerance};
  return KGPT_OK;
}

kgpt_status kgpt_limits_nonrelativistic(double mu, double omega, double xi,
                                        double hbar, const double* c_values,
                                        size_t c_count, const int* levels,
                                        size_t level_count, kgpt_limits** out) {
  KGPT_REQUIRE(out);
  *out = nullptr;
  if (c_count > 0) KGPT_REQUIRE(c_values);
  if (level_count > 0) KGPT_REQUIRE(levels);
  return guarded([&] {
    *out = new kgpt_limits{kgpt::nonrelativistic_limit_check(
        mu, omega, xi, std::span<const double>(c_values, c_count),
        std::span<const int>(levels, level_count), hbar)};
  });
}

kgpt_status kgpt_limits_alpha(const kgpt_params* params, const double* alpha_values,
                              size_t alpha_count, const int* levels,
                              size_t level_count, double x_extent, int x_points,
                              kgpt_limits** out) {
  KGPT_REQUIRE(params);
  KGPT_REQUIRE(out);
  *out = nullptr;
  if (alpha_count > 0) KGPT_REQUIRE(alpha_values);
  if (level_count > 0) KGPT_REQUIRE(levels);
  return guarded([&] {
    kgpt_params p = *params;
    p.alpha = 1.0;  // validated per alpha inside the study
    *out = new kgpt_limits{kgpt::alpha_limit_check(
        to_params(p), std::span<const double>(alpha_values, alpha_count),
        std::span<const int>(levels, level_count), x_extent, x_points)};
  });
}

void kgpt_limits_destroy(kgpt_limits* limits) { delete limits; }

size_t kgpt_limits_size(const kgpt_limits* limits) {
  return limits ? limits->report.rows.size() : 0;
}

kgpt_status kgpt_limits_row(const kgpt_limits* limits, size_t i,
                            kgpt_limit_row* out) {
  KGPT_REQUIRE(limits);
  KGPT_REQUIRE(out);
  if (i >= limits->report.rows.size()) {
    return fail(KGPT_ERR_OUT_OF_RANGE, "limit row index out of range");
  }
  const kgpt::LimitRow& r = limits->report.rows[i];
  *out = {r.parameter, r.n, r.value, r.target, r.deviation, r.order, r.xi_shift,
          r.wavefunction_deviation, r.level_count, r.admissible ? 1 : 0};
  return KGPT_OK;
}

}  // extern "C"
