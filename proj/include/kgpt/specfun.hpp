#pragma once

// Special functions with complex arguments and parameters.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "kgpt/core.hpp"

namespace kgpt {

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence.
Complex hermite(int n, Complex z);

/// Jacobi polynomial P_n^{(a,b)}(z) for complex a, b, z.
/// Throws RecurrenceBreakdown when a leading recurrence coefficient vanishes.
Complex jacobi(int n, Complex a, Complex b, Complex z);

/// k-th derivative in z of P_n^{(a,b)}(z), via
/// d/dz P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
Complex jacobi_derivative(int n, Complex a, Complex b, Complex z, int k = 1);

/// log Gamma(z). On Re z >= 1/2 this is the branch continuous with the real
/// lgamma; below that the reflection formula fixes it only modulo 2*pi*i.
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

// Composite Gauss-Legendre rule on [-L, L].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double half_width = 0.0;

  static QuadratureRule gauss_legendre(double half_width, int panels,
                                       int points_per_panel = 32);
};

struct QuadratureResult {
  Complex value;
  double edge_ratio = 0.0;  // max(|f(-L)|, |f(L)|) / max |f| over the nodes
  bool truncation_warning = false;
};

inline constexpr double kTruncationThreshold = 1e-10;

template <class F>
QuadratureResult quadrature_integrate(F&& f, const QuadratureRule& rule) {
  QuadratureResult out;
  double peak = 0.0;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Complex v = f(rule.nodes[i]);
    peak = std::max(peak, std::abs(v));
    sum += rule.weights[i] * v;
  }
  const double edge =
      std::max(std::abs(Complex(f(-rule.half_width))),
               std::abs(Complex(f(rule.half_width))));
  out.value = sum;
  out.edge_ratio = peak > 0.0 ? edge / peak : 0.0;
  out.truncation_warning = out.edge_ratio > kTruncationThreshold;
  return out;
}

}  // namespace kgpt
