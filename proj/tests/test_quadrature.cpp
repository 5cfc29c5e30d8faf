#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hw/errors.hpp"
#include "hw/quadrature.hpp"

namespace qd = hw::quadrature;

TEST_CASE("polynomial and trigonometric integrals") {
    auto r1 = qd::integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12, 0.0, 10000);
    CHECK(r1.converged);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto r2 = qd::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                            1e-12, 0.0, 10000);
    CHECK(r2.converged);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("oscillatory integral") {
    auto r = qd::integrate([](double x) { return std::cos(10.0 * x); }, 0.0, 50.0,
                           1e-11, 0.0, 200000);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::sin(500.0) / 10.0).epsilon(1e-9));
    CHECK(r.abs_integral > 10.0);  // heavy cancellation is visible in the |f| mass
}

TEST_CASE("gaussian integral and error estimate honesty") {
    auto r = qd::integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0,
                           1e-12, 0.0, 100000);
    CHECK(r.converged);
    const double exact = std::sqrt(std::numbers::pi);
    CHECK(std::abs(r.value - exact) <= std::max(r.error_estimate, 1e-14 * exact));
}

TEST_CASE("budget exhaustion reports non-convergence") {
    auto nasty = [](double x) { return std::cos(200.0 * x * x); };
    auto r = qd::integrate(nasty, 0.0, 20.0, 1e-14, 0.0, 60);
    CHECK(!r.converged);
    CHECK(r.evaluations <= 60);
}

TEST_CASE("deterministic results") {
    auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
    auto a = qd::integrate(f, 0.0, 30.0, 1e-11, 0.0, 100000);
    auto b = qd::integrate(f, 0.0, 30.0, 1e-11, 0.0, 100000);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("degenerate and invalid bounds") {
    auto r = qd::integrate([](double x) { return x; }, 2.0, 2.0, 1e-10, 0.0, 100);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
    CHECK_THROWS_AS(qd::integrate([](double x) { return x; }, 0.0,
                                  std::numeric_limits<double>::infinity(), 1e-10, 0.0, 100),
                    hw::domain_error);
}
