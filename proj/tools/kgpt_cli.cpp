// kgpt: spectra, wavefunctions, verification and limit studies from the
// command line. Talks to the library only through the C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgpt/kgpt.h"

using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kBadInput = 2, kInadmissible = 3 };

struct ApiError : std::runtime_error {
  kgpt_status status;
  ApiError(kgpt_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(kgpt_status status, const char* call) {
  if (status == KGPT_OK) return;
  std::string message = kgpt_last_error_message();
  if (message.empty()) message = kgpt_status_string(status);
  throw ApiError(status, std::string(call) + ": " + message);
}

int exit_code_for(kgpt_status status) {
  switch (status) {
    case KGPT_ERR_INVALID_PARAMETER:
    case KGPT_ERR_NULL_ARGUMENT:
    case KGPT_ERR_OUT_OF_RANGE:
      return kBadInput;
    case KGPT_ERR_INADMISSIBLE_LEVEL:
    case KGPT_ERR_DEGENERATE_LEVEL:
      return kInadmissible;
    default:
      return kVerificationFailed;
  }
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ModelPtr = std::unique_ptr<kgpt_model, Deleter<kgpt_model, kgpt_model_destroy>>;
using SpectrumPtr =
    std::unique_ptr<kgpt_spectrum, Deleter<kgpt_spectrum, kgpt_spectrum_destroy>>;
using WavefunctionPtr = std::unique_ptr<
    kgpt_wavefunction, Deleter<kgpt_wavefunction, kgpt_wavefunction_destroy>>;
using ReportPtr = std::unique_ptr<kgpt_report, Deleter<kgpt_report, kgpt_report_destroy>>;
using LimitsPtr = std::unique_ptr<kgpt_limits, Deleter<kgpt_limits, kgpt_limits_destroy>>;

struct Config {
  std::string model = "linear";
  double mu = 1.0;
  double lambda = 1.0;
  double eta = 0.0;
  double alpha = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  std::string format = "csv";
  std::string output;
  std::string levels = "0..3";
  std::string branch = "plus";

  // wavefunction
  int points = 201;
  double x_min = std::numeric_limits<double>::quiet_NaN();
  double x_max = std::numeric_limits<double>::quiet_NaN();

  // verify
  int grid_points = 801;
  double half_width = 0.0;
  double perturb = 0.0;
  bool real_axis = false;

  // limits
  std::string study = "both";
  double omega = 1.0;
  double xi = 0.0;
  std::vector<double> c_values{1e2, 1e3, 1e4};
  std::vector<double> alpha_values{0.1, 0.05, 0.025};
  double x_extent = 6.0;
  int x_points = 241;
};

kgpt_params params_of(const Config& cfg) {
  kgpt_params p;
  p.model = cfg.model == "hyperbolic" ? KGPT_MODEL_HYPERBOLIC : KGPT_MODEL_LINEAR;
  p.mu = cfg.mu;
  p.lambda = cfg.lambda;
  p.eta = cfg.eta;
  p.alpha = cfg.alpha;
  p.hbar = cfg.hbar;
  p.c = cfg.c;
  return p;
}

ModelPtr make_model(const Config& cfg) {
  const kgpt_params p = params_of(cfg);
  kgpt_model* raw = nullptr;
  check(kgpt_model_create(&p, &raw), "model");
  return ModelPtr(raw);
}

// "3", "0..3", "0,2,5" or combinations such as "0..2,5".
std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 0) {
      throw ApiError(KGPT_ERR_INVALID_PARAMETER, "bad level selection '" + text + "'");
    }
    return v;
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(part.substr(0, dots));
    const int hi = to_int(part.substr(dots + 2));
    if (hi < lo) {
      throw ApiError(KGPT_ERR_INVALID_PARAMETER, "empty level range '" + part + "'");
    }
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw ApiError(KGPT_ERR_INVALID_PARAMETER, "no levels selected");
  return out;
}

std::vector<kgpt_branch> parse_branches(const std::string& text) {
  if (text == "plus") return {KGPT_BRANCH_PLUS};
  if (text == "minus") return {KGPT_BRANCH_MINUS};
  return {KGPT_BRANCH_PLUS, KGPT_BRANCH_MINUS};
}

const char* branch_name(int b) { return b == KGPT_BRANCH_PLUS ? "plus" : "minus"; }

json params_json(const Config& cfg) {
  json p = {{"mu", cfg.mu},       {"lambda", cfg.lambda}, {"eta", cfg.eta},
            {"alpha", cfg.alpha}, {"hbar", cfg.hbar},     {"c", cfg.c}};
  if (cfg.model == "linear") p.erase("alpha");
  return p;
}

json envelope(const Config& cfg, const std::string& command) {
  return json{{"command", command},
              {"model", cfg.model},
              {"params", params_json(cfg)},
              {"levels", json::array()},
              {"checks", json::array()}};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) {
        throw ApiError(KGPT_ERR_INVALID_PARAMETER, "cannot open output file " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const Config& cfg, const json& doc) {
  Output out(cfg.output);
  out.stream() << doc.dump(2) << '\n';
}

std::string bounds_message(const kgpt_bounds& b, const Config& cfg) {
  std::ostringstream msg;
  if (b.constraint_satisfied) {
    msg << "no bound states: no level satisfies n <= (B - |eta|)/(hbar alpha^2)";
  } else {
    msg << "no bound states: the constraint lambda^2 > hbar alpha^2 |eta| fails ("
        << cfg.lambda * cfg.lambda
        << " <= " << cfg.hbar * cfg.alpha * cfg.alpha * std::abs(cfg.eta) << ")";
  }
  return msg.str();
}

int cmd_spectrum(const Config& cfg) {
  const ModelPtr model = make_model(cfg);
  const std::vector<int> levels = parse_levels(cfg.levels);
  const std::vector<kgpt_branch> branches = parse_branches(cfg.branch);
  kgpt_bounds bounds;
  check(kgpt_model_bounds(model.get(), &bounds), "bounds");

  struct Row {
    int n;
    int branch;
    double energy;
    double residual;
    bool admissible;
  };
  std::vector<Row> rows;
  std::string message;
  const bool any_physical = !bounds.bounded || bounds.n_max_physical >= 0;
  if (!any_physical) {
    message = bounds_message(bounds, cfg);
  } else {
    for (int n : levels) {
      // Requests past the normalisable cap have no auxiliary eigenvalue at all.
      if (bounds.bounded && n > bounds.n_max_effective) continue;
      kgpt_level level;
      const kgpt_status st = kgpt_model_level(model.get(), n, &level);
      if (st == KGPT_ERR_INADMISSIBLE_LEVEL || st == KGPT_ERR_DEGENERATE_LEVEL) {
        for (kgpt_branch b : branches) {
          rows.push_back({n, b, std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN(), false});
        }
        continue;
      }
      check(st, "level");
      for (kgpt_branch b : branches) {
        const double e = b == KGPT_BRANCH_PLUS ? level.energy_plus : level.energy_minus;
        double eps = 0.0;
        check(kgpt_model_epsilon(model.get(), n, e, &eps), "epsilon");
        rows.push_back({n, b, e, std::abs(eps), true});
      }
    }
  }
  if (!message.empty()) std::cerr << message << '\n';

  if (cfg.format == "json") {
    json doc = envelope(cfg, "spectrum");
    doc["bounds"] = {{"bounded", bounds.bounded != 0},
                     {"n_max_effective", bounds.n_max_effective},
                     {"n_max_physical", bounds.n_max_physical},
                     {"constraint_satisfied", bounds.constraint_satisfied != 0}};
    for (const Row& r : rows) {
      doc["levels"].push_back({{"n", r.n},
                               {"branch", branch_name(r.branch)},
                               {"energy", r.energy},
                               {"epsilon_residual", r.residual},
                               {"admissible", r.admissible}});
    }
    if (!message.empty()) doc["message"] = message;
    emit_json(cfg, doc);
    return kOk;
  }
  Output out(cfg.output);
  out.stream() << "n,branch,energy,epsilon_residual,admissible\n";
  for (const Row& r : rows) {
    out.stream() << r.n << ',' << branch_name(r.branch) << ',' << fmt(r.energy) << ','
                 << fmt(r.residual) << ',' << (r.admissible ? 1 : 0) << '\n';
  }
  return kOk;
}

int cmd_wavefunction(const Config& cfg) {
  const ModelPtr model = make_model(cfg);
  const std::vector<int> levels = parse_levels(cfg.levels);
  if (levels.size() != 1) {
    throw ApiError(KGPT_ERR_INVALID_PARAMETER, "wavefunction takes exactly one level");
  }
  if (cfg.points < 2) throw ApiError(KGPT_ERR_INVALID_PARAMETER, "--points must be >= 2");
  const kgpt_branch branch =
      cfg.branch == "minus" ? KGPT_BRANCH_MINUS : KGPT_BRANCH_PLUS;
  kgpt_wavefunction* raw = nullptr;
  check(kgpt_wavefunction_create(model.get(), levels.front(), branch, &raw),
        "wavefunction");
  const WavefunctionPtr wf(raw);
  kgpt_wavefunction_info info;
  check(kgpt_wavefunction_get_info(wf.get(), &info), "info");

  const double hi = std::isnan(cfg.x_max) ? info.support_half_width : cfg.x_max;
  const double lo = std::isnan(cfg.x_min) ? -hi : cfg.x_min;
  if (!(hi > lo)) throw ApiError(KGPT_ERR_INVALID_PARAMETER, "need x-min < x-max");
  const int m = cfg.points;
  std::vector<double> xs(m), mirrored(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = lo + (hi - lo) * i / (m - 1);
    mirrored[i] = -xs[i];
  }
  std::vector<double> re(m), im(m), mre(m), mim(m);
  check(kgpt_wavefunction_eval(wf.get(), xs.data(), m, re.data(), im.data()), "eval");
  check(kgpt_wavefunction_eval(wf.get(), mirrored.data(), m, mre.data(), mim.data()),
        "eval");
  double pt_dev = 0.0;
  for (int i = 0; i < m; ++i) {
    pt_dev = std::max(pt_dev, std::hypot(re[i] - mre[i], im[i] + mim[i]));
  }
  double norm_re = 0.0, norm_im = 0.0, edge = 0.0;
  check(kgpt_wavefunction_pt_norm(wf.get(), &norm_re, &norm_im, &edge), "pt_norm");

  if (cfg.format == "json") {
    json doc = envelope(cfg, "wavefunction");
    json level = {{"n", info.n},
                  {"branch", branch_name(info.branch)},
                  {"energy", info.energy},
                  {"coefficient", info.coefficient},
                  {"normalization_magnitude", info.normalization_magnitude},
                  {"phase_quarter_turns", info.phase_quarter_turns},
                  {"pt_norm", {norm_re, norm_im}},
                  {"pt_conjugacy_max_deviation", pt_dev}};
    if (cfg.model == "linear") {
      level["center_shift"] = {info.center_shift_re, info.center_shift_im};
    } else {
      level["exponent_a"] = {info.exponent_a_re, info.exponent_a_im};
      level["exponent_b"] = {info.exponent_b_re, info.exponent_b_im};
    }
    json samples = json::array();
    for (int i = 0; i < m; ++i) samples.push_back({xs[i], re[i], im[i]});
    level["samples"] = samples;
    doc["levels"].push_back(level);
    emit_json(cfg, doc);
    return kOk;
  }
  Output out(cfg.output);
  std::ostream& os = out.stream();
  os << "# n=" << info.n << " branch=" << branch_name(info.branch)
     << " energy=" << fmt(info.energy) << '\n'
     << "# normalization_magnitude=" << fmt(info.normalization_magnitude)
     << " phase_quarter_turns=" << info.phase_quarter_turns << '\n'
     << "# pt_norm=" << fmt(norm_re) << ',' << fmt(norm_im)
     << " pt_conjugacy_max_deviation=" << fmt(pt_dev) << '\n'
     << "x,re_psi,im_psi\n";
  for (int i = 0; i < m; ++i) {
    os << fmt(xs[i]) << ',' << fmt(re[i]) << ',' << fmt(im[i]) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  const ModelPtr model = make_model(cfg);
  kgpt_verify_options opts = kgpt_default_verify_options();
  const std::vector<int> levels = parse_levels(cfg.levels);
  int top = 0;
  for (int n : levels) top = std::max(top, n);
  opts.max_level = top;
  opts.num_points = cfg.grid_points;
  opts.half_width = cfg.half_width;
  opts.energy_perturbation = cfg.perturb;
  opts.stationary_contour = cfg.real_axis ? 0 : 1;
  kgpt_report* raw = nullptr;
  check(kgpt_verify_run(model.get(), &opts, &raw), "verify");
  const ReportPtr report(raw);

  std::vector<kgpt_check> checks(kgpt_report_size(report.get()));
  for (std::size_t i = 0; i < checks.size(); ++i) {
    check(kgpt_report_check(report.get(), i, &checks[i]), "check");
  }
  const bool passed = kgpt_report_passed(report.get()) != 0;
  auto status = [](const kgpt_check& c) {
    return c.skipped ? "skip" : c.passed ? "pass" : "fail";
  };

  if (cfg.format == "json") {
    json doc = envelope(cfg, "verify");
    doc["physical_levels"] = kgpt_report_physical_levels(report.get());
    doc["passed"] = passed;
    for (const kgpt_check& c : checks) {
      doc["checks"].push_back({{"name", c.name},
                               {"level", c.level},
                               {"status", status(c)},
                               {"measured", c.measured},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
    }
    emit_json(cfg, doc);
  } else {
    Output out(cfg.output);
    out.stream() << "check,level,status,measured,tolerance,detail\n";
    for (const kgpt_check& c : checks) {
      out.stream() << c.name << ',' << c.level << ',' << status(c) << ','
                   << fmt(c.measured) << ',' << fmt(c.tolerance) << ",\"" << c.detail
                   << "\"\n";
    }
  }
  if (kgpt_report_physical_levels(report.get()) == 0) {
    std::cerr << "zero physical levels\n";
  }
  if (!passed) {
    for (const kgpt_check& c : checks) {
      if (!c.passed && !c.skipped) {
        std::cerr << "verification failed: " << c.name;
        if (c.level >= 0) std::cerr << " (n=" << c.level << ")";
        std::cerr << '\n';
        break;
      }
    }
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_limits(const Config& cfg) {
  const std::vector<int> levels = parse_levels(cfg.levels);
  struct Study {
    std::string name;
    LimitsPtr rows;
  };
  std::vector<Study> studies;
  if (cfg.study == "nonrelativistic" || cfg.study == "both") {
    kgpt_limits* raw = nullptr;
    check(kgpt_limits_nonrelativistic(cfg.mu, cfg.omega, cfg.xi, cfg.hbar,
                                      cfg.c_values.data(), cfg.c_values.size(),
                                      levels.data(), levels.size(), &raw),
          "nonrelativistic limit");
    studies.push_back({"nonrelativistic", LimitsPtr(raw)});
  }
  if (cfg.study == "alpha" || cfg.study == "both") {
    const kgpt_params p = params_of(cfg);
    kgpt_limits* raw = nullptr;
    check(kgpt_limits_alpha(&p, cfg.alpha_values.data(), cfg.alpha_values.size(),
                            levels.data(), levels.size(), cfg.x_extent, cfg.x_points,
                            &raw),
          "alpha limit");
    studies.push_back({"alpha", LimitsPtr(raw)});
  }

  json doc = envelope(cfg, "limits");
  doc["rows"] = json::array();
  std::ostringstream csv;
  csv << "study,parameter,n,value,target,deviation,order,xi_shift,"
         "wavefunction_deviation,level_count,admissible\n";
  for (const Study& s : studies) {
    const std::size_t count = kgpt_limits_size(s.rows.get());
    for (std::size_t i = 0; i < count; ++i) {
      kgpt_limit_row r;
      check(kgpt_limits_row(s.rows.get(), i, &r), "limit row");
      doc["rows"].push_back({{"study", s.name},
                             {"parameter", r.parameter},
                             {"n", r.n},
                             {"value", r.value},
                             {"target", r.target},
                             {"deviation", r.deviation},
                             {"order", r.order},
                             {"xi_shift", r.xi_shift},
                             {"wavefunction_deviation", r.wavefunction_deviation},
                             {"level_count", r.level_count},
                             {"admissible", r.admissible != 0}});
      csv << s.name << ',' << fmt(r.parameter) << ',' << r.n << ',' << fmt(r.value)
          << ',' << fmt(r.target) << ',' << fmt(r.deviation) << ',' << fmt(r.order)
          << ',' << fmt(r.xi_shift) << ',' << fmt(r.wavefunction_deviation) << ','
          << r.level_count << ',' << r.admissible << '\n';
    }
  }
  if (cfg.format == "json") {
    doc["nonrelativistic"] = {{"omega", cfg.omega}, {"xi", cfg.xi}};
    emit_json(cfg, doc);
  } else {
    Output out(cfg.output);
    out.stream() << csv.str();
  }
  return kOk;
}

int cmd_bounds(const Config& cfg) {
  const ModelPtr model = make_model(cfg);
  kgpt_bounds b;
  check(kgpt_model_bounds(model.get(), &b), "bounds");
  double coefficient = 0.0;
  check(kgpt_model_leading_coefficient(model.get(), &coefficient), "coefficient");
  const int count = b.bounded ? b.n_max_physical + 1 : -1;
  if (cfg.format == "json") {
    json doc = envelope(cfg, "bounds");
    doc["bounds"] = {{"coefficient", coefficient},
                     {"bounded", b.bounded != 0},
                     {"n_max_effective", b.n_max_effective},
                     {"n_max_physical", b.n_max_physical},
                     {"constraint_satisfied", b.constraint_satisfied != 0},
                     {"physical_level_count", count}};
    emit_json(cfg, doc);
    return kOk;
  }
  Output out(cfg.output);
  out.stream() << "coefficient,bounded,n_max_effective,n_max_physical,"
                  "constraint_satisfied,physical_level_count\n"
               << fmt(coefficient) << ',' << b.bounded << ',' << b.n_max_effective
               << ',' << b.n_max_physical << ',' << b.constraint_satisfied << ','
               << count << '\n';
  return kOk;
}

void add_model_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--model", cfg.model, "linear or hyperbolic")
      ->check(CLI::IsMember({"linear", "hyperbolic"}))
      ->capture_default_str();
  cmd->add_option("--mu", cfg.mu, "mass at the origin")->capture_default_str();
  cmd->add_option("--lambda", cfg.lambda, "mass-gradient strength")->capture_default_str();
  cmd->add_option("--eta", cfg.eta, "vector-potential strength")->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha, "inverse length (hyperbolic model)")
      ->capture_default_str();
  cmd->add_option("--hbar", cfg.hbar, "action constant")->capture_default_str();
  cmd->add_option("--c", cfg.c, "speed of light")->capture_default_str();
}

void add_output_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", cfg.output, "output path (default stdout)")
      ->envname("KGPT_OUTPUT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon PT-symmetric bound states: spectra, wavefunctions, checks"};
  app.set_version_flag("--version", std::string(kgpt_version()));
  app.require_subcommand(1);
  Config cfg;

  auto* spectrum = app.add_subcommand("spectrum", "bound-state energies");
  add_model_options(spectrum, cfg);
  add_output_options(spectrum, cfg);
  spectrum->add_option("-n,--levels", cfg.levels, "levels, e.g. 0..3 or 0,2")
      ->capture_default_str();
  spectrum->add_option("--branch", cfg.branch, "plus, minus or both")
      ->check(CLI::IsMember({"plus", "minus", "both"}))
      ->capture_default_str();

  auto* wavefunction = app.add_subcommand("wavefunction", "sampled eigenfunction");
  add_model_options(wavefunction, cfg);
  add_output_options(wavefunction, cfg);
  wavefunction->add_option("-n,--level", cfg.levels, "level index")->required();
  wavefunction->add_option("--branch", cfg.branch, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  wavefunction->add_option("--points", cfg.points, "number of samples")
      ->capture_default_str();
  wavefunction->add_option("--x-min", cfg.x_min, "left end (default -x-max)");
  wavefunction->add_option("--x-max", cfg.x_max, "right end (default: support width)");

  auto* verify = app.add_subcommand("verify", "closed forms against numerical routes");
  add_model_options(verify, cfg);
  add_output_options(verify, cfg);
  verify->add_option("-n,--levels", cfg.levels, "levels to check (up to the largest)")
      ->capture_default_str();
  verify->add_option("--points", cfg.grid_points, "grid points (odd)")
      ->capture_default_str();
  verify->add_option("--half-width", cfg.half_width, "grid half-width (default: automatic)");
  verify->add_option("--perturb-energy", cfg.perturb,
                     "relative energy shift for the residual check (negative control)");
  verify->add_flag("--real-axis", cfg.real_axis,
                   "keep the grid on the real axis for the linear model");

  auto* limits = app.add_subcommand("limits", "c -> infinity and alpha -> 0 studies");
  add_model_options(limits, cfg);
  add_output_options(limits, cfg);
  limits->add_option("--study", cfg.study, "nonrelativistic, alpha or both")
      ->check(CLI::IsMember({"nonrelativistic", "alpha", "both"}))
      ->capture_default_str();
  limits->add_option("-n,--levels", cfg.levels, "levels")->capture_default_str();
  limits->add_option("--omega", cfg.omega, "oscillator frequency (lambda = mu omega)")
      ->capture_default_str();
  limits->add_option("--xi", cfg.xi, "eta = mu xi / c")->capture_default_str();
  limits->add_option("--c-values", cfg.c_values, "speed-of-light sequence")
      ->delimiter(',')
      ->capture_default_str();
  limits->add_option("--alpha-values", cfg.alpha_values, "alpha sequence")
      ->delimiter(',')
      ->capture_default_str();
  limits->add_option("--x-extent", cfg.x_extent, "wavefunction comparison half-range")
      ->capture_default_str();
  limits->add_option("--x-points", cfg.x_points, "wavefunction comparison points")
      ->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "level-count caps and constraint");
  add_model_options(bounds, cfg);
  add_output_options(bounds, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*wavefunction) {
      if (cfg.levels.find_first_of(",.") != std::string::npos) {
        throw ApiError(KGPT_ERR_INVALID_PARAMETER, "wavefunction takes exactly one level");
      }
      return cmd_wavefunction(cfg);
    }
    if (*verify) return cmd_verify(cfg);
    if (*limits) return cmd_limits(cfg);
    if (*bounds) return cmd_bounds(cfg);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kBadInput;
}
