#include <array>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/specfun.hpp"

namespace kgpt {

namespace {

// Lanczos approximation with g = 7 and nine terms (the coefficient set
// popularised by Godfrey). Relative error of Gamma is ~1e-15 on Re z >= 1/2;
// the unit tests pin it against Gamma(n) = (n-1)!, Gamma(1/2) = sqrt(pi),
// |Gamma(1+iy)|^2 = pi y / sinh(pi y) and the functional recurrence.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_right(Complex z) {
  const Complex w = z - 1.0;
  Complex series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (w + static_cast<double>(i));
  }
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * detail::kPi) + (w + 0.5) * std::log(t) - t +
         std::log(series);
}

// log(sin(pi z)) modulo 2*pi*i, without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(std::sin(detail::kPi * z));
  const Complex i(0.0, 1.0);
  if (y > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    return -i * detail::kPi * z +
           std::log(1.0 - std::exp(2.0 * i * detail::kPi * z)) +
           Complex(std::log(0.5), 0.5 * detail::kPi);
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidParameter("log_gamma: argument must be finite");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    std::ostringstream msg;
    msg << "log_gamma: pole at z = " << z.real();
    throw PoleError(msg.str());
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
  return std::log(detail::kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

}  // namespace kgpt
