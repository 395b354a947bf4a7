#include <cmath>
#include <sstream>
#include <string>

#include "kgpt/errors.hpp"
#include "kgpt/specfun.hpp"

namespace kgpt {

namespace {

void require_degree(int n) {
  if (n < 0) throw InvalidParameter("polynomial degree must be >= 0");
}

}  // namespace

Complex hermite(int n, Complex z) {
  require_degree(n);
  if (n == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex jacobi(int n, Complex a, Complex b, Complex z) {
  require_degree(n);
  if (n == 0) return 1.0;
  const Complex ab = a + b;
  Complex prev = 1.0;
  Complex cur = 0.5 * (ab + 2.0) * z + 0.5 * (a - b);
  for (int k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const Complex s = 2.0 * kd + ab;  // 2k + a + b
    const Complex lead = 2.0 * kd * (kd + ab) * (s - 2.0);
    const double scale = 2.0 * kd * (kd + std::abs(ab)) * (2.0 * kd + std::abs(ab));
    if (std::abs(lead) <= 1e-14 * scale) {
      std::ostringstream msg;
      msg << "jacobi recurrence breaks down at k=" << k << " for a=" << a
          << ", b=" << b;
      throw RecurrenceBreakdown(msg.str());
    }
    const Complex c1 = (s - 1.0) * (s * (s - 2.0) * z + a * a - b * b);
    const Complex c2 = 2.0 * (kd + a - 1.0) * (kd + b - 1.0) * s;
    const Complex next = (c1 * cur - c2 * prev) / lead;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex jacobi_derivative(int n, Complex a, Complex b, Complex z, int k) {
  require_degree(n);
  if (k < 0) throw InvalidParameter("derivative order must be >= 0");
  if (k > n) return 0.0;
  Complex factor = 1.0;
  for (int j = 0; j < k; ++j) {
    factor *= 0.5 * (static_cast<double>(n + j + 1) + a + b);
  }
  const double kd = static_cast<double>(k);
  return factor * jacobi(n - k, a + kd, b + kd, z);
}

}  // namespace kgpt
