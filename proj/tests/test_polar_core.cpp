#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mellin_polar/function_library.hpp"
#include "mellin_polar/polar_core.hpp"
#include "oracles.hpp"

using namespace mellin;

TEST_CASE("PolarPoint keeps theta unreduced") {
  const PolarPoint a(1.0, 0.0), b(1.0, 2.0 * kPi);
  CHECK_FALSE(a == b);
  CHECK(std::abs(a.z() - b.z()) < 1e-15);
  CHECK(log_distance(a, b) == Catch::Approx(2.0 * kPi));
  CHECK_THROWS_AS(PolarPoint(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(PolarPoint(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PolarPoint(1.0, std::nan("")), DomainError);
  const auto far = PolarPoint::from_log({900.0, 0.5});
  CHECK(far.log_r() == 900.0);
  CHECK(std::isinf(far.r()));
}

TEST_CASE("power function evaluates on sheets") {
  const auto f = make_power(0.5);
  CHECK(std::abs(f(PolarPoint(4.0, 0.0)) - 2.0) < 1e-14);
  // theta = 2 pi is another sheet: (e^{2 pi i})^{1/2} = -1
  CHECK(std::abs(f(PolarPoint(1.0, 2.0 * kPi)) + 1.0) < 1e-14);
}

TEST_CASE("domains reject points") {
  const PolarFunction f([](const PolarPoint& p) { return Complex(p.theta()); }, Domain::strip(-1.0, 1.0));
  CHECK(f.domain().contains(PolarPoint(2.0, 0.5)));
  CHECK_FALSE(f.domain().contains(PolarPoint(2.0, 1.5)));
  CHECK_THROWS_AS(polar_derivative_fd(f, PolarPoint(1.0, 0.9999999)), DomainError);

  const auto d = Domain::punctured({PolarPoint(1.0, 0.0), PolarPoint(std::exp(1.0), 0.0)});
  CHECK_FALSE(d.contains(PolarPoint(1.0, 0.0)));
  CHECK(d.contains(PolarPoint(1.0, 0.2), 0.1));
  CHECK_FALSE(d.contains(PolarPoint(1.0, 0.2), 0.3));
  CHECK(d.distance_to_other_singularity(PolarPoint(1.0, 0.0)) == Catch::Approx(1.0));
}

TEST_CASE("finite-difference polar derivative against closed forms") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lr(-2.0, 2.0), th(-2.0, 2.0);
  const Complex a{2.0, 1.0};
  const auto f = make_power(a);
  for (int i = 0; i < 50; ++i) {
    const PolarPoint p(std::exp(lr(rng)), th(rng));
    const Complex exact = oracle::power_dpol(a, p.log_coordinate());
    CHECK(std::abs(polar_derivative_fd(f, p) - exact) <= 1e-8 * std::abs(exact));
  }
  CHECK(polar_derivative_fd(make_power(0.0), PolarPoint(3.0, 1.0)) == Complex(0.0, 0.0));
}

TEST_CASE("polar derivative of z^1 is 1 on every sheet") {
  const auto f = make_power(1.0);
  for (double theta : {0.0, 2.0 * kPi, -7.0}) CHECK(std::abs(polar_derivative_fd(f, PolarPoint(1.5, theta)) - 1.0) < 1e-9);
}

TEST_CASE("Mellin derivative: eigenfunctions and linearity") {
  const Complex a{1.0, 0.5};
  const double c = 0.7;
  const auto f = make_power(a);
  const PolarPoint p(1.3, 0.4);
  CHECK(std::abs(mellin_derivative(f, p, c) - (a + c) * f(p)) < 1e-12);
  // constant: Theta_c 1 = c
  const PolarFunction one([](const PolarPoint&) { return Complex(1.0); });
  CHECK(std::abs(mellin_derivative(one, p, c) - c) < 1e-12);

  const auto g = make_power(-2.0);
  const PolarFunction sum([f, g](const PolarPoint& q) { return 2.0 * f(q) - 3.0 * g(q); });
  const Complex lhs = mellin_derivative(sum, p, c);
  const Complex rhs = 2.0 * mellin_derivative(f, p, c) - 3.0 * mellin_derivative(g, p, c);
  CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("higher Mellin derivatives of powers") {
  const Complex a{2.0, 1.0};
  const auto f = make_power(a);
  const PolarPoint p(0.8, -0.3);
  for (double c : {0.0, 1.5, -1.0})
    for (int k = 0; k <= 6; ++k) {
      const auto d = higher_mellin_derivative(f, p, c, k);
      const Complex exact = std::pow(a + c, k) * f(p);
      CHECK(std::abs(d.value - exact) <= 1e-11 * std::abs(exact));
      CHECK_FALSE(d.conditioning_warning);
    }
  // no closed forms: finite differences, warned past order four
  const PolarFunction raw([a](const PolarPoint& q) { return std::exp(a * q.log_coordinate()); });
  const auto d3 = higher_mellin_derivative(raw, p, 0.5, 3);
  CHECK(std::abs(d3.value - std::pow(a + 0.5, 3) * raw(p)) <= 1e-5 * std::abs(raw(p)) * std::pow(std::abs(a + 0.5), 3));
  CHECK_FALSE(d3.conditioning_warning);
  CHECK(higher_mellin_derivative(raw, p, 0.5, 5).conditioning_warning);
}

TEST_CASE("Cauchy-Riemann residual separates analytic from conjugate") {
  const auto f = make_power(Complex(1.0, 2.0));
  const PolarFunction conj([](const PolarPoint& q) { return std::conj(q.z()); });
  for (double theta : {-1.0, 0.0, 2.5}) {
    const PolarPoint p(1.7, theta);
    CHECK(cauchy_riemann_residual(f, p) <= 1e-6);
    CHECK(cauchy_riemann_residual(conj, p) >= 0.1);
  }
}

TEST_CASE("Taylor expansion of a power") {
  const Complex a{1.0, 0.5};
  const auto f = make_power(a);
  const PolarPoint p0(1.2, 0.3);
  const auto ex = taylor_expand(f, p0, 0.0, 20);
  CHECK(ex.order() == 20);
  for (double ang = 0.0; ang < 2 * kPi; ang += 0.7) {
    const PolarPoint p = PolarPoint::from_log(p0.log_coordinate() + std::polar(0.5, ang));
    const Complex target = TaylorExpansion::target(f, p, 0.0);
    CHECK(std::abs(ex.eval(p) - target) <= 1e-10 * std::abs(target));
  }
  // with c the expansion targets (re^{i theta})^c f
  const auto ec = taylor_expand(f, p0, 1.5, 20);
  const PolarPoint q = PolarPoint::from_log(p0.log_coordinate() + Complex(0.2, -0.3));
  CHECK(std::abs(ec.eval(q) - std::exp(1.5 * q.log_coordinate()) * f(q)) < 1e-10 * std::abs(f(q)));
  CHECK(ex.eval_partial(p0, 0) == ex.coefficients()[0] * 1.0);
  CHECK_THROWS_AS(ex.eval_partial(p0, 21), PreconditionError);
}
