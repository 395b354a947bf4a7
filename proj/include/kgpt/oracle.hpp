#pragma once

// Independent numerical route: three-point finite differences for
// -hbar^2 d^2/dx^2 + V(x) on a uniform symmetric grid with Dirichlet walls,
// a dense eigensolve, and root finding of eps_n(E) = 0.

#include <functional>
#include <vector>

#include "kgpt/analytic.hpp"
#include "kgpt/core.hpp"

namespace kgpt {

struct GridProblem {
  double half_width = 0.0;
  int num_points = 0;           // including both Dirichlet nodes; odd
  double spacing = 0.0;         // h = 2L/(N-1)
  double energy = 0.0;          // frozen KG energy (NaN for custom potentials)
  double hbar = 1.0;
  double contour_offset = 0.0;  // V sampled at x + i * contour_offset
  ModelParams params;
  std::vector<double> nodes;    // all N nodes, nodes[j] = -nodes[N-1-j]
  std::vector<Complex> potential;  // V at the N-2 interior nodes

  std::size_t dimension() const { return potential.size(); }
  // Off-diagonal entry -hbar^2/h^2 of the (complex symmetric) matrix.
  double coupling() const { return -hbar * hbar / (spacing * spacing); }
  Complex diagonal(std::size_t i) const {
    return potential[i] + 2.0 * hbar * hbar / (spacing * spacing);
  }
  // Row-major dense (N-2) x (N-2) matrix.
  std::vector<Complex> dense_matrix() const;
};

GridProblem discretize(const ModelParams& params, double energy,
                       double half_width, int num_points,
                       double contour_offset = 0.0);

/// Imaginary part of the complex stationary point of V_E. Model I:
/// -eta E / (c (lambda^2 + eta^2)), on which contour V_E is real and the
/// grid operator is real symmetric. Model II: 0 (the contour is kept on the
/// real axis, away from the poles of tanh).
double stationary_contour_offset(const ModelParams& params, double energy);

GridProblem discretize_potential(const std::function<Complex(double)>& potential,
                                 double hbar, double half_width, int num_points);

/// Model I: 10 sqrt(hbar/A) + |eta E/(c A^2)|; Model II: 20/alpha.
double default_half_width(const ModelParams& params, double energy);

struct OracleSpectrum {
  std::vector<Complex> eigenvalues;  // ascending real part
  double max_imag = 0.0;
};

/// The k eigenvalues with smallest real part. Throws ConvergenceFailure.
OracleSpectrum eigen_spectrum(const GridProblem& problem, int k);

/// Eigenvalues whose inverse-iteration eigenvector is localised: at most
/// `edge_fraction_limit` of sum |v|^2 lies in the outer quarter of the box on
/// either side. Discretised continuum (box) states are discarded, so on a
/// complex potential a bound level above Re V(+-inf) keeps its index. Returns
/// the k lowest by real part (fewer if the grid has fewer bound states).
OracleSpectrum bound_state_spectrum(const GridProblem& problem, int k,
                                    double edge_fraction_limit = 1e-3);

/// Eigenvector of the complex symmetric tridiagonal matrix for an (approximate)
/// eigenvalue, by two steps of inverse iteration with partial pivoting.
std::vector<Complex> tridiagonal_eigenvector(const std::vector<Complex>& diag,
                                             const std::vector<Complex>& off,
                                             Complex eigenvalue);

/// All eigenvalues of the complex symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal (off.size() == diag.size() - 1), by implicit QL
/// with complex orthogonal rotations. Unsorted.
std::vector<Complex> symmetric_tridiagonal_eigenvalues(std::vector<Complex> diag,
                                                       std::vector<Complex> off);

/// Re V_E(x -> +inf) for Model II: (lambda^2+eta^2)/alpha^2 + mu^2 c^2 - E^2/c^2.
double continuum_threshold(const ModelParams& params, double energy);

/// Number of eigenvalues with real part strictly below the threshold.
int count_below(const OracleSpectrum& spectrum, double threshold);

enum class EpsilonSource { ClosedForm, Grid };

struct GridOptions {
  int num_points = 801;
  double half_width = 0.0;  // <= 0: default_half_width at each E
  bool stationary_contour = false;  // sample V on stationary_contour_offset
};

/// eps_n(E) from the shape-invariance chain or from the grid eigensolve
/// (n-th localised eigenvalue, see bound_state_spectrum).
double epsilon_of_energy(const ModelParams& params, int n, double energy,
                         EpsilonSource source = EpsilonSource::ClosedForm,
                         const GridOptions& grid = {});

/// Root of eps_n(E) = 0 on [lo, hi] to 1e-10 relative (bisection).
/// Throws NoSignChange when eps_n has the same sign at both ends.
double quantization_root(const ModelParams& params, int n, double lo, double hi,
                         EpsilonSource source = EpsilonSource::ClosedForm,
                         const GridOptions& grid = {});

/// ||(-hbar^2 D2 + V) psi||_inf / ||psi||_inf with the three-point D2 applied
/// to psi sampled on the grid (whose V is frozen at the grid's energy).
double residual_check(const GridProblem& grid, const Wavefunction& psi);

}  // namespace kgpt
