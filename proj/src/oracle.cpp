#include "kgpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/susy.hpp"

namespace kgpt {

namespace {

GridProblem make_grid(double hbar, double half_width, int num_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidParameter("grid half-width must be positive");
  }
  if (num_points < 3 || num_points % 2 == 0) {
    throw InvalidParameter("grid needs an odd number of points >= 3");
  }
  GridProblem g;
  g.half_width = half_width;
  g.num_points = num_points;
  g.spacing = 2.0 * half_width / (num_points - 1);
  g.hbar = hbar;
  g.nodes.resize(num_points);
  const int mid = num_points / 2;
  for (int j = 0; j <= mid; ++j) {
    // Built outward from x = 0 so the grid is exactly symmetric.
    const double x = (j == mid) ? half_width : j * g.spacing;
    g.nodes[mid + j] = x;
    g.nodes[mid - j] = -x;
  }
  return g;
}

}  // namespace

std::vector<Complex> GridProblem::dense_matrix() const {
  const std::size_t n = dimension();
  std::vector<Complex> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = diagonal(i);
    if (i + 1 < n) {
      m[i * n + i + 1] = coupling();
      m[(i + 1) * n + i] = coupling();
    }
  }
  return m;
}

GridProblem discretize(const ModelParams& params, double energy,
                       double half_width, int num_points, double contour_offset) {
  params.validate();
  detail::require_finite(energy, "energy");
  detail::require_finite(contour_offset, "contour offset");
  GridProblem g = make_grid(params.hbar, half_width, num_points);
  g.energy = energy;
  g.params = params;
  g.contour_offset = contour_offset;
  g.potential.reserve(num_points - 2);
  for (int j = 1; j + 1 < num_points; ++j) {
    g.potential.push_back(
        contour_offset == 0.0
            ? effective_potential(params, energy, g.nodes[j])
            : continued_effective_potential(params, energy,
                                            Complex(g.nodes[j], contour_offset)));
  }
  return g;
}

double stationary_contour_offset(const ModelParams& params, double energy) {
  params.validate();
  if (params.model == Model::HyperbolicMass) return 0.0;
  return -params.eta * energy /
         (params.c * (params.lambda * params.lambda + params.eta * params.eta));
}

GridProblem discretize_potential(const std::function<Complex(double)>& potential,
                                 double hbar, double half_width, int num_points) {
  if (!(hbar > 0.0)) throw InvalidParameter("hbar must be > 0");
  GridProblem g = make_grid(hbar, half_width, num_points);
  g.energy = std::numeric_limits<double>::quiet_NaN();
  g.potential.reserve(num_points - 2);
  for (int j = 1; j + 1 < num_points; ++j) {
    g.potential.push_back(detail::checked(potential(g.nodes[j]), "potential"));
  }
  return g;
}

double default_half_width(const ModelParams& params, double energy) {
  params.validate();
  if (params.model == Model::HyperbolicMass) return 20.0 / params.alpha;
  const double a = solve_leading_coefficient(params);
  return 10.0 * std::sqrt(params.hbar / a) +
         std::abs(params.eta * energy / (params.c * a * a));
}

OracleSpectrum eigen_spectrum(const GridProblem& problem, int k) {
  const std::size_t n = problem.dimension();
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw InvalidParameter("requested eigenvalue count exceeds the grid size");
  }
  std::vector<Complex> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = problem.diagonal(i);
  std::vector<Complex> off(n > 0 ? n - 1 : 0, Complex(problem.coupling(), 0.0));
  std::vector<Complex> values =
      symmetric_tridiagonal_eigenvalues(std::move(diag), std::move(off));
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  OracleSpectrum out;
  out.eigenvalues.assign(values.begin(), values.begin() + k);
  for (const Complex& v : out.eigenvalues) {
    out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
  }
  return out;
}

OracleSpectrum bound_state_spectrum(const GridProblem& problem, int k,
                                    double edge_fraction_limit) {
  const std::size_t n = problem.dimension();
  if (k < 0) throw InvalidParameter("requested eigenvalue count must be >= 0");
  std::vector<Complex> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = problem.diagonal(i);
  const std::vector<Complex> off(n > 0 ? n - 1 : 0,
                                 Complex(problem.coupling(), 0.0));
  std::vector<Complex> values = symmetric_tridiagonal_eigenvalues(diag, off);
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const std::size_t quarter = n / 4;
  OracleSpectrum out;
  for (const Complex& value : values) {
    if (static_cast<int>(out.eigenvalues.size()) == k) break;
    const std::vector<Complex> v = tridiagonal_eigenvector(diag, off, value);
    double total = 0.0;
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::norm(v[i]);
      total += w;
      if (i < quarter) left += w;
      if (i >= n - quarter) right += w;
    }
    if (total > 0.0 && std::max(left, right) <= edge_fraction_limit * total) {
      out.eigenvalues.push_back(value);
      out.max_imag = std::max(out.max_imag, std::abs(value.imag()));
    }
  }
  return out;
}

double continuum_threshold(const ModelParams& p, double energy) {
  if (p.model != Model::HyperbolicMass) {
    throw InvalidParameter("only the hyperbolic model has a continuum threshold");
  }
  const double c2 = p.c * p.c;
  return (p.lambda * p.lambda + p.eta * p.eta) / (p.alpha * p.alpha) +
         p.mu * p.mu * c2 - energy * energy / c2;
}

int count_below(const OracleSpectrum& spectrum, double threshold) {
  return static_cast<int>(std::count_if(
      spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
      [threshold](Complex v) { return v.real() < threshold; }));
}

double epsilon_of_energy(const ModelParams& params, int n, double energy,
                         EpsilonSource source, const GridOptions& grid) {
  if (source == EpsilonSource::ClosedForm) {
    const auto spectrum = epsilon_spectrum(make_superpotential(params, energy), n);
    if (static_cast<int>(spectrum.levels.size()) <= n) {
      std::ostringstream msg;
      msg << "level n = " << n << " lies beyond the normalisable cap "
          << spectrum.cap.value_or(-1);
      throw InadmissibleLevel(msg.str());
    }
    return spectrum.levels[n].epsilon;
  }
  const double L =
      grid.half_width > 0.0 ? grid.half_width : default_half_width(params, energy);
  const double offset =
      grid.stationary_contour ? stationary_contour_offset(params, energy) : 0.0;
  const GridProblem problem = discretize(params, energy, L, grid.num_points, offset);
  const OracleSpectrum spectrum = bound_state_spectrum(problem, n + 1);
  if (static_cast<int>(spectrum.eigenvalues.size()) <= n) {
    std::ostringstream msg;
    msg << "grid at E = " << energy << " resolves only "
        << spectrum.eigenvalues.size() << " localised levels, need n = " << n;
    throw InadmissibleLevel(msg.str());
  }
  return spectrum.eigenvalues[n].real();
}

double quantization_root(const ModelParams& params, int n, double lo, double hi,
                         EpsilonSource source, const GridOptions& grid) {
  detail::require_finite(lo, "bracket low end");
  detail::require_finite(hi, "bracket high end");
  if (lo > hi) std::swap(lo, hi);
  auto eps = [&](double e) { return epsilon_of_energy(params, n, e, source, grid); };
  double f_lo = eps(lo);
  const double f_hi = eps(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "eps_" << n << "(E) does not change sign on [" << lo << ", " << hi
        << "]: eps(lo) = " << f_lo << ", eps(hi) = " << f_hi;
    throw NoSignChange(msg.str());
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(std::abs(lo), std::abs(hi)) || mid == lo ||
        mid == hi) {
      break;
    }
    const double f_mid = eps(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double residual_check(const GridProblem& grid, const Wavefunction& psi) {
  const std::size_t n = grid.nodes.size();
  std::vector<Complex> samples(n);
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    samples[j] = psi(grid.nodes[j]);
    peak = std::max(peak, std::abs(samples[j]));
  }
  const double k = grid.hbar * grid.hbar / (grid.spacing * grid.spacing);
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const Complex second = samples[j + 1] - 2.0 * samples[j] + samples[j - 1];
    const Complex r = -k * second + grid.potential[j - 1] * samples[j];
    worst = std::max(worst, std::abs(r));
  }
  return peak > 0.0 ? worst / peak : 0.0;
}

}  // namespace kgpt
