#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "kgpt/core.hpp"
#include "kgpt/errors.hpp"

namespace kgpt::detail {

inline constexpr double kPi = 3.14159265358979323846;

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidParameter(std::string(what) + " must be finite");
  }
}

inline Complex checked(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw InvalidParameter(std::string(what) + ": result is not finite");
  }
  return v;
}

// sech^2(y) without overflowing cosh for large |y|.
inline double sech_squared(double y) {
  const double e = std::exp(-2.0 * std::abs(y));
  const double s = 2.0 * std::exp(-std::abs(y)) / (1.0 + e);
  return s * s;
}

// log(cosh(y)), stable for large |y|.
inline double log_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace kgpt::detail

namespace kgpt::detail {

// Largest integer strictly below k. Values within a relative 1e-12 of an
// integer are treated as that integer, so an exact-integer k maps to k - 1
// even after rounding noise in k.
inline int largest_integer_below(double k) {
  const double nearest = std::round(k);
  if (std::abs(k - nearest) <= 1e-12 * std::max(1.0, std::abs(k))) {
    return static_cast<int>(nearest) - 1;
  }
  return static_cast<int>(std::floor(k));
}

}  // namespace kgpt::detail
