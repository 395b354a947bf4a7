#include "doctest.h"

#include <cmath>
#include <limits>

#include "kgpt/core.hpp"
#include "kgpt/errors.hpp"
#include "test_support.hpp"

using namespace kgpt;
using kgpt::test::Draws;
using kgpt::test::rel_error;

TEST_CASE("mass profiles") {
  CHECK(mass_at(linear_mass(0.0, 1.0, 0.0), 2.0) == doctest::Approx(2.0));
  CHECK(mass_at(linear_mass(0.0, 1.0, 0.0), -2.0) == doctest::Approx(2.0));
  CHECK(mass_at(linear_mass(1.0, 7.0, 0.0), 0.0) == 1.0);
  CHECK(mass_at(hyperbolic_mass(1.0, 7.0, 0.0, 0.3), 0.0) == 1.0);
  CHECK(mass_at(linear_mass(1.0, 3.0, 0.0), 1.0) ==
        doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));

  const ModelParams p = hyperbolic_mass(1.0, 2.0, 0.0, 0.5, 1.0, 2.0);
  const double saturated = std::sqrt(1.0 + std::pow(2.0 / (0.5 * 2.0), 2));
  CHECK(mass_at(p, 80.0) == doctest::Approx(saturated).epsilon(1e-14));

  Draws draws;
  for (int i = 0; i < 50; ++i) {
    const ModelParams q = draws.any(i % 2 ? Model::LinearMass : Model::HyperbolicMass);
    CHECK(mass_at(q, draws.uniform(-10.0, 10.0)) >= q.mu);
  }
}

TEST_CASE("vector potentials") {
  CHECK(vector_potential_at(linear_mass(1.0, 1.0, 0.0), 3.0) == Complex(0.0, 0.0));
  CHECK(vector_potential_at(linear_mass(1.0, 1.0, 1.0), 1.0) == Complex(0.0, 1.0));
  const Complex far = vector_potential_at(hyperbolic_mass(1.0, 1.0, 1.0, 1.0), 40.0);
  CHECK(far.real() == 0.0);
  CHECK(far.imag() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("effective potential closed forms") {
  CHECK(effective_potential(linear_mass(1.0, 1.0, 0.0), 0.0, 0.0) == Complex(1.0, 0.0));

  const ModelParams p = linear_mass(0.0, 1.0, 1.0);
  CHECK(rel_error(effective_potential(p, 1.0, 1.0), Complex(1.0, 2.0)) < 1e-15);
  CHECK(rel_error(assembled_effective_potential(p, 1.0, 1.0), Complex(1.0, 2.0)) < 1e-15);

  SUBCASE("PT symmetry and agreement with the generic assembly") {
    Draws draws;
    for (Model model : {Model::LinearMass, Model::HyperbolicMass}) {
      for (int i = 0; i < 100; ++i) {
        const ModelParams q = draws.any(model);
        const double energy = draws.uniform(-5.0, 5.0);
        const double x = draws.uniform(-6.0, 6.0);
        const Complex v = effective_potential(q, energy, x);
        const Complex mirrored = effective_potential(q, energy, -x);
        CHECK(std::abs(v - std::conj(mirrored)) <= 1e-12 * std::max(1.0, std::abs(v)));
        const Complex assembled = assembled_effective_potential(q, energy, x);
        CHECK(std::abs(v - assembled) <= 1e-10 * std::max(1.0, std::abs(v)));
      }
    }
  }

  SUBCASE("continuation agrees on the real axis") {
    Draws draws(7);
    for (int i = 0; i < 20; ++i) {
      const ModelParams q = draws.any(i % 2 ? Model::LinearMass : Model::HyperbolicMass);
      const double x = draws.uniform(-3.0, 3.0);
      const Complex a = continued_effective_potential(q, 1.3, Complex(x, 0.0));
      const Complex b = effective_potential(q, 1.3, x);
      CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("hyperbolic potential approaches the linear one with order two in alpha") {
  const ModelParams lin = linear_mass(1.0, 1.3, 0.7);
  const double x = 0.8;
  const double energy = 1.7;
  const Complex target = effective_potential(lin, energy, x);
  double previous = 0.0;
  for (double alpha : {1e-1, 1e-2, 1e-3}) {
    const ModelParams hyp = hyperbolic_mass(1.0, 1.3, 0.7, alpha);
    const double deviation = std::abs(effective_potential(hyp, energy, x) - target);
    if (previous > 0.0) {
      const double order = std::log10(previous / deviation);
      CHECK(order == doctest::Approx(2.0).epsilon(0.02));
    }
    previous = deviation;
  }
  CHECK(previous < 1e-5);
}

TEST_CASE("parameter validation") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(linear_mass(-1.0, 1.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(linear_mass(1.0, 0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(linear_mass(1.0, 1.0, nan), InvalidParameter);
  CHECK_THROWS_AS(linear_mass(1.0, 1.0, 0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(linear_mass(1.0, 1.0, 0.0, 1.0, -1.0), InvalidParameter);
  CHECK_THROWS_AS(hyperbolic_mass(1.0, 1.0, 0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(hyperbolic_mass(1.0, 1.0, 0.0, std::numeric_limits<double>::infinity()),
                  InvalidParameter);
  CHECK_NOTHROW(linear_mass(0.0, 1.0, -3.0));

  ModelParams p;
  p.alpha = -1.0;  // irrelevant to the linear model
  CHECK_NOTHROW(p.validate());

  try {
    linear_mass(1.0, -2.0, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameter);
    CHECK(std::string(to_string(e.code())) == "InvalidParameter");
  }
}
