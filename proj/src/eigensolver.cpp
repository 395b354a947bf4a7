#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "kgpt/errors.hpp"
#include "kgpt/oracle.hpp"

namespace kgpt {

namespace {

constexpr int kMaxSweepsPerEigenvalue = 60;

// Picks the sign of sqrt(g^2 + 1) that keeps |g + r| away from zero.
Complex signed_root(Complex g, Complex r) {
  return std::abs(g + r) >= std::abs(g - r) ? r : -r;
}

}  // namespace

// Implicit QL for T = T^T complex. Complex Givens pairs (c, s) with
// c^2 + s^2 = 1 keep the matrix complex symmetric, so the cost stays O(n) per
// sweep. A rotation with c^2 + s^2 = 0 has no normalisation; the sweep is
// then restarted with a perturbed shift.
std::vector<Complex> symmetric_tridiagonal_eigenvalues(std::vector<Complex> d,
                                                       std::vector<Complex> off) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (off.size() + 1 != n) {
    throw InvalidParameter("off-diagonal must have exactly n-1 entries");
  }
  std::vector<Complex> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());

  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> shift_history;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    double shift_jitter = 0.0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * scale) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweepsPerEigenvalue) {
        std::ostringstream msg;
        msg << "tridiagonal QL did not converge: matrix size " << n
            << ", eigenvalue index " << l << ", last shifts:";
        const std::size_t from =
            shift_history.size() > 5 ? shift_history.size() - 5 : 0;
        for (std::size_t i = from; i < shift_history.size(); ++i) {
          msg << ' ' << shift_history[i];
        }
        throw ConvergenceFailure(msg.str());
      }
      // Exceptional shifts after stagnation.
      if (sweeps % 10 == 0) shift_jitter = 1e-3 * sweeps;

      const std::vector<Complex> d_saved(d.begin() + l, d.begin() + m + 1);
      const std::vector<Complex> e_saved(e.begin() + l, e.begin() + m + 1);

      Complex g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      Complex r = std::sqrt(g * g + 1.0);
      const Complex shift = d[l] - e[l] / (g + signed_root(g, r));
      const Complex applied = shift + shift_jitter * Complex(1.0, 1.0) * std::abs(e[l]);
      shift_history.push_back(applied);
      g = d[m] - applied;

      Complex s = 1.0, c = 1.0, p = 0.0;
      bool broke_down = false;
      bool underflow = false;
      std::size_t i = m;
      while (i > l) {
        --i;
        const Complex f = s * e[i];
        const Complex b = c * e[i];
        r = std::sqrt(f * f + g * g);
        const double size = std::abs(f) + std::abs(g);
        if (size == 0.0) {
          underflow = true;
          e[i + 1] = 0.0;
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        if (std::abs(r) <= 1e3 * eps * size) {
          broke_down = true;
          break;
        }
        e[i + 1] = r;
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (broke_down) {
        std::copy(d_saved.begin(), d_saved.end(), d.begin() + l);
        std::copy(e_saved.begin(), e_saved.end(), e.begin() + l);
        shift_jitter += 1e-2;
        continue;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

std::vector<Complex> tridiagonal_eigenvector(const std::vector<Complex>& diag,
                                             const std::vector<Complex>& off,
                                             Complex eigenvalue) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) {
    throw InvalidParameter("off-diagonal must have exactly n-1 entries");
  }
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    norm = std::max(norm, std::abs(diag[i]) + (i < off.size() ? 2.0 * std::abs(off[i]) : 0.0));
  }
  const double tiny = std::max(norm, 1.0) * std::numeric_limits<double>::epsilon();

  // LU of T - lambda I with row interchanges (LAPACK gttrf layout):
  // U has diagonal d, first superdiagonal du, second superdiagonal du2.
  std::vector<Complex> d(n), du(n, 0.0), du2(n, 0.0), l(n, 0.0);
  std::vector<bool> swapped(n, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - eigenvalue;
  for (std::size_t i = 0; i + 1 < n; ++i) du[i] = off[i];
  std::vector<Complex> dl(off);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (std::abs(d[i]) < tiny) d[i] = tiny;
      l[i] = dl[i] / d[i];
      d[i + 1] -= l[i] * du[i];
    } else {
      swapped[i] = true;
      l[i] = d[i] / dl[i];
      d[i] = dl[i];
      const Complex t = du[i];
      du[i] = d[i + 1];
      d[i + 1] = t - l[i] * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -l[i] * du[i + 1];
      }
    }
  }
  if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;

  std::vector<Complex> v(n, Complex(1.0, 0.0));
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const Complex t = v[i];
        v[i] = v[i + 1];
        v[i + 1] = t - l[i] * v[i];
      } else {
        v[i + 1] -= l[i] * v[i];
      }
    }
    for (std::size_t k = n; k-- > 0;) {
      Complex acc = v[k];
      if (k + 1 < n) acc -= du[k] * v[k + 1];
      if (k + 2 < n) acc -= du2[k] * v[k + 2];
      v[k] = acc / d[k];
    }
    double peak = 0.0;
    for (const Complex& x : v) peak = std::max(peak, std::abs(x));
    if (!(peak > 0.0) || !std::isfinite(peak)) {
      throw ConvergenceFailure("inverse iteration produced a non-finite eigenvector");
    }
    for (Complex& x : v) x /= peak;
  }
  return v;
}

}  // namespace kgpt
