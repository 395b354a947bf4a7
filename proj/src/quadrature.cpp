#include <cmath>
#include <utility>
#include <vector>

#include "detail.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/specfun.hpp"

namespace kgpt {

QuadratureRule QuadratureRule::gauss_legendre(double half_width, int panels,
                                              int points_per_panel) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidParameter("quadrature half-width must be positive");
  }
  if (panels < 1 || points_per_panel < 1) {
    throw InvalidParameter("quadrature needs at least one panel and one point");
  }
  const int m = points_per_panel;
  // (P_m(x), P_m'(x)) by the Bonnet recurrence.
  auto legendre = [m](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double value = m == 1 ? x : p1;
    const double below = m == 1 ? 1.0 : p0;
    return std::pair{value, m * (x * value - below) / (x * x - 1.0)};
  };
  std::vector<double> ref_nodes(m), ref_weights(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(detail::kPi * (i + 0.75) / (m + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (m % 2 == 1 && i == m / 2) x = 0.0;
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    ref_nodes[i] = -x;
    ref_nodes[m - 1 - i] = x;
    ref_weights[i] = w;
    ref_weights[m - 1 - i] = w;
  }

  QuadratureRule rule;
  rule.half_width = half_width;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * m);
  rule.weights.reserve(static_cast<std::size_t>(panels) * m);
  const double width = 2.0 * half_width / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = -half_width + p * width;
    const double mid = lo + 0.5 * width;
    for (int i = 0; i < m; ++i) {
      rule.nodes.push_back(mid + 0.5 * width * ref_nodes[i]);
      rule.weights.push_back(0.5 * width * ref_weights[i]);
    }
  }
  return rule;
}

}  // namespace kgpt
