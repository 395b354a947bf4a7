#include "doctest.h"

#include <cmath>

#include "kgpt/analytic.hpp"
#include "kgpt/errors.hpp"
#include "kgpt/susy.hpp"
#include "test_support.hpp"

using namespace kgpt;
using kgpt::test::Draws;
using kgpt::test::linspace;
using kgpt::test::rel_error;

namespace {

std::vector<double> sample_window(const SuperpotentialDescriptor& d, int count) {
  const ModelParams& p = d.params;
  const double half = p.model == Model::LinearMass
                          ? 5.0 * std::sqrt(p.hbar / d.coefficient)
                          : 5.0 / p.alpha;
  return linspace(-half, half, count);
}

// Second derivative of the ground-state value by a five-point stencil, so the
// residual does not reuse the analytic derivatives.
Complex numeric_second(const SuperpotentialDescriptor& d, double x, double h) {
  auto f = [&](double t) { return ground_state(d, t).value; };
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
          f(x - 2 * h)) /
         (12.0 * h * h);
}

}  // namespace

TEST_CASE("superpotential values") {
  CHECK(superpotential_at(make_superpotential(linear_mass(1.0, 1.0, 0.0), 2.0), 0.5) ==
        Complex(0.5, 0.0));

  const SuperpotentialDescriptor d = make_superpotential(linear_mass(1.0, 3.0, 4.0), 1.0);
  CHECK(d.coefficient == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(rel_error(superpotential_at(d, 0.0), Complex(0.0, 0.8)) < 1e-15);

  const ModelParams saturating = hyperbolic_mass(1.0, std::sqrt(2.0), 0.0, 1.0);
  const SuperpotentialDescriptor h = make_superpotential(saturating, 0.0);
  CHECK(h.coefficient == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(superpotential_at(h, 40.0).real() == doctest::Approx(1.0).epsilon(1e-15));

  Draws draws;
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = draws.any(i % 2 ? Model::LinearMass : Model::HyperbolicMass);
    const SuperpotentialDescriptor s = make_superpotential(p, draws.uniform(-3.0, 3.0));
    const double x = draws.uniform(-2.0, 2.0), step = 1e-5;
    const Complex fd =
        (superpotential_at(s, x + step) - superpotential_at(s, x - step)) / (2.0 * step);
    CHECK(rel_error(superpotential_derivative(s, x), fd) < 1e-8);
  }
}

TEST_CASE("leading coefficients") {
  CHECK(solve_leading_coefficient(linear_mass(1.0, 3.0, 4.0)) == doctest::Approx(5.0));
  CHECK(solve_leading_coefficient(linear_mass(1.0, 2.5, 0.0)) == 2.5);
  const double b = solve_leading_coefficient(hyperbolic_mass(1.0, 2.0, 0.0, 1.0));
  CHECK(b == doctest::Approx(1.5615528128088303).epsilon(1e-14));
  CHECK(b * (b + 1.0) == doctest::Approx(4.0).epsilon(1e-14));

  Draws draws;
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = draws.hyperbolic();
    const double a = solve_leading_coefficient(p);
    const double h = p.hbar * p.alpha * p.alpha;
    CHECK(a > 0.0);
    CHECK(a * (a + h) ==
          doctest::Approx(p.lambda * p.lambda + p.eta * p.eta).epsilon(1e-12));
  }
}

TEST_CASE("partner potentials") {
  const PartnerPair lin =
      partner_potentials(make_superpotential(linear_mass(1.0, 1.0, 0.0), 0.0), 0.0);
  CHECK(lin.minus == Complex(-1.0, 0.0));
  CHECK(lin.plus == Complex(1.0, 0.0));

  const PartnerPair hyp = partner_potentials(
      make_superpotential(hyperbolic_mass(1.0, std::sqrt(2.0), 0.0, 1.0), 0.0), 0.0);
  CHECK(std::abs(hyp.minus - Complex(-1.0, 0.0)) < 1e-14);
  CHECK(std::abs(hyp.plus - Complex(1.0, 0.0)) < 1e-14);

  Draws draws(5);
  for (int i = 0; i < 40; ++i) {
    const ModelParams p = draws.any(i % 2 ? Model::LinearMass : Model::HyperbolicMass);
    const SuperpotentialDescriptor d = make_superpotential(p, draws.uniform(-3.0, 3.0));
    const double x = draws.uniform(-3.0, 3.0);
    const PartnerPair pair = partner_potentials(d, x);
    const Complex expected = 2.0 * p.hbar * superpotential_derivative(d, x);
    CHECK(std::abs(pair.plus - pair.minus - expected) <=
          1e-12 * std::max(1.0, std::abs(expected)));
    // V_E = V-(a_1) + eps_0
    const Complex ve = effective_potential(p, d.energy, x);
    CHECK(std::abs(pair.minus + ground_epsilon(d) - ve) <= 1e-10 * std::max(1.0, std::abs(ve)));
  }
}

TEST_CASE("shape invariance") {
  SUBCASE("linear model remainder is 2 hbar A") {
    Draws draws;
    for (int i = 0; i < 50; ++i) {
      const ModelParams p = draws.linear();
      const SuperpotentialDescriptor d = make_superpotential(p, draws.uniform(-4.0, 4.0));
      const std::vector<double> xs = sample_window(d, 50);
      const ShapeInvarianceReport r = verify_shape_invariance(d, xs, 1e-10);
      CHECK(r.a2 == r.a1);
      CHECK(r.remainder == doctest::Approx(2.0 * p.hbar * d.coefficient).epsilon(1e-14));
      CHECK(r.samples == 50);
    }
  }

  SUBCASE("hyperbolic model steps a by hbar alpha^2") {
    const ModelParams p = hyperbolic_mass(1.0, 2.0, 0.0, 1.0);
    const SuperpotentialDescriptor d = make_superpotential(p, 0.0);
    const ShapeInvarianceReport r = verify_shape_invariance(d, sample_window(d, 50), 1e-10);
    CHECK(r.a2 == doctest::Approx(d.coefficient - 1.0).epsilon(1e-15));

    Draws draws(9);
    for (int i = 0; i < 50; ++i) {
      const ModelParams q = draws.hyperbolic();
      const SuperpotentialDescriptor s = make_superpotential(q, draws.uniform(-4.0, 4.0));
      const double a = s.coefficient, h = q.hbar * q.alpha * q.alpha;
      if (a - h == 0.0) continue;
      const ShapeInvarianceReport rr = verify_shape_invariance(s, sample_window(s, 50), 1e-10);
      const double g1 = a * a / (q.alpha * q.alpha) -
                        std::pow(q.eta * s.energy / (q.c * a), 2);
      const double g2 = (a - h) * (a - h) / (q.alpha * q.alpha) -
                        std::pow(q.eta * s.energy / (q.c * (a - h)), 2);
      CHECK(rr.remainder == doctest::Approx(g1 - g2).epsilon(1e-12));
    }
  }

  SUBCASE("a wrong parameter map is rejected") {
    const ModelParams p = hyperbolic_mass(1.0, 2.0, 0.0, 1.0);
    const SuperpotentialDescriptor d = make_superpotential(p, 0.0);
    CHECK_THROWS_AS(verify_shape_invariance(d, sample_window(d, 50), 1e-10, d.coefficient),
                    ShapeInvarianceViolation);
    CHECK_THROWS_AS(verify_shape_invariance(d, std::vector<double>{}, 1e-10),
                    InvalidParameter);
  }

  SUBCASE("ledger") {
    const ModelParams p = hyperbolic_mass(1.0, 3.0, 0.5, 0.7);
    const SuperpotentialDescriptor d = make_superpotential(p, 2.0);
    const ShapeInvarianceLedger ledger = shape_invariance_ledger(d, 3);
    REQUIRE(ledger.parameters.size() == 4);
    REQUIRE(ledger.remainders.size() == 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(ledger.parameters[k + 1] ==
            doctest::Approx(ledger.parameters[k] - 0.49).epsilon(1e-14));
    }
    CHECK_FALSE(ledger.parameter_map.empty());
  }
}

TEST_CASE("algebraic epsilon spectrum") {
  SUBCASE("linear model") {
    const SuperpotentialDescriptor d = make_superpotential(linear_mass(1.0, 1.0, 0.0), 0.0);
    const EpsilonSpectrum s = epsilon_spectrum(d, 6);
    REQUIRE(s.levels.size() == 7);
    CHECK_FALSE(s.cap.has_value());
    for (const EpsilonLevel& level : s.levels) {
      CHECK(level.epsilon == doctest::Approx(1.0 + (2.0 * level.n + 1.0)).epsilon(1e-14));
      CHECK(level.epsilon_minus == doctest::Approx(2.0 * level.n).epsilon(1e-14));
    }
  }

  SUBCASE("hyperbolic model is truncated at the normalisability cap") {
    const SuperpotentialDescriptor d =
        make_superpotential(hyperbolic_mass(1.0, 2.0, 0.0, 1.0), 0.0);
    const EpsilonSpectrum s = epsilon_spectrum(d, 5);
    CHECK(s.levels.size() == 2);
    CHECK(s.truncated);
    REQUIRE(s.cap.has_value());
    CHECK(*s.cap == 1);
    CHECK_THROWS_AS(epsilon_closed_form(d.params, 2, 0.0), InadmissibleLevel);
  }

  SUBCASE("accumulated chain against the telescoped closed form") {
    Draws draws(21);
    for (Model model : {Model::LinearMass, Model::HyperbolicMass}) {
      for (int i = 0; i < 40; ++i) {
        const ModelParams p = draws.any(model);
        const SuperpotentialDescriptor d = make_superpotential(p, draws.uniform(-4.0, 4.0));
        const EpsilonSpectrum s = epsilon_spectrum(d, 8);
        double previous = -1e300;
        for (const EpsilonLevel& level : s.levels) {
          const double closed = epsilon_closed_form(p, level.n, d.energy);
          CHECK(std::abs(level.epsilon - closed) <= 1e-10 * std::max(1.0, std::abs(closed)));
          CHECK(level.epsilon > previous);
          previous = level.epsilon;
        }
        CHECK(s.levels.front().epsilon_minus == 0.0);
      }
    }
  }
}

TEST_CASE("ground state factorisation") {
  Draws draws(31);
  for (Model model : {Model::LinearMass, Model::HyperbolicMass}) {
    for (int i = 0; i < 20; ++i) {
      const ModelParams p = draws.any(model);
      const SuperpotentialDescriptor d = make_superpotential(p, draws.uniform(-2.0, 2.0));
      const double width = model == Model::LinearMass ? std::sqrt(p.hbar / d.coefficient)
                                                      : 1.0 / p.alpha;
      double worst = 0.0, peak = 0.0;
      for (double x : linspace(-2.0 * width, 2.0 * width, 9)) {
        const Jet g = ground_state(d, x);
        worst = std::max(worst, std::abs(-p.hbar * p.hbar * g.second +
                                         partner_potentials(d, x).minus * g.value));
        peak = std::max(peak, std::abs(g.value));
        // The stencil follows the local log-derivative W/hbar of the state.
        const double rate = std::abs(superpotential_at(d, x)) / p.hbar;
        const double step = 1e-3 / std::max(1.0 / width, rate);
        const Complex psi = ground_state(d, x).value;
        const Complex kinetic = -p.hbar * p.hbar * numeric_second(d, x, step);
        const Complex potential = partner_potentials(d, x).minus * psi;
        const double residual = std::abs(kinetic + potential) /
                                (std::abs(kinetic) + std::abs(potential));
        CHECK(residual <= 1e-6);
      }
      CHECK(worst <= 1e-6 * peak);
    }
  }
}

TEST_CASE("ladder operators") {
  const ModelParams cases[] = {
      linear_mass(1.0, 1.0, 0.5),
      linear_mass(1.0, 3.0, 4.0),
      hyperbolic_mass(1.0, 2.0, 0.5, 1.0),
      hyperbolic_mass(1.0, 3.0, 0.5, 0.7),
  };
  for (const ModelParams& p : cases) {
    CAPTURE(to_string(p.model));
    CAPTURE(p.eta);
    const SpectrumLevel level = bound_level(p, 1);
    const Wavefunction psi1(p, level);
    const SuperpotentialDescriptor d = make_superpotential(p, level.energy_plus);
    const SuperpotentialDescriptor d2 =
        d.with_coefficient(next_parameter(p, d.coefficient));

    // B(a_1) maps the ground state at a_2 onto the first excited state.
    auto raised = apply_raising_operator(d2.with_coefficient(d.coefficient),
                                         [&](double x) { return ground_state(d2, x); });
    const double half = psi1.support_half_width() / 3.0;
    std::vector<Complex> ratios;
    double peak = 0.0;
    const std::vector<double> xs = linspace(-half, half, 50);
    for (double x : xs) peak = std::max(peak, std::abs(psi1(x)));
    for (double x : xs) {
      const Complex target = psi1(x);
      if (std::abs(target) < 1e-3 * peak) continue;
      ratios.push_back(raised(x) / target);
    }
    REQUIRE(ratios.size() > 30);
    double spread = 0.0;
    for (const Complex& r : ratios) spread = std::max(spread, rel_error(r, ratios.front()));
    CHECK(spread <= 1e-8);

    // A(a_1) annihilates the ground state at a_1.
    auto lowered = apply_lowering_operator(d, [&](double x) { return ground_state(d, x); });
    for (double x : linspace(-half, half, 11)) {
      const Jet g = ground_state(d, x);
      const double scale = std::abs(p.hbar * g.first) +
                           std::abs(superpotential_at(d, x) * g.value);
      CHECK(std::abs(lowered(x)) <= 1e-12 * scale);
    }
  }
}
