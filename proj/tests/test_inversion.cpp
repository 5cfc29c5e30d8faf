#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hw/asymptotics.hpp"
#include "hw/errors.hpp"
#include "hw/inversion.hpp"
#include "hw/quadrature.hpp"
#include "hw/saddle.hpp"

using hw::HwParams;
using hw::LogComplex;
using cplx = std::complex<double>;
namespace inv = hw::inversion;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_linear(double log_a, double log_b) { return std::abs(std::expm1(log_a - log_b)); }
} // namespace

TEST_CASE("transform_integrand is real and positive on the real axis") {
    const HwParams p = HwParams::from_r(1.0);
    for (double u : {0.5, 10.0, 5778.888085415544, 265341.02437139643}) {
        LogComplex v = inv::transform_integrand(cplx(u, 0.0), 0.05, p);
        CHECK(v.phase == 0.0);
        CHECK(std::isfinite(v.log_modulus));
    }
}

TEST_CASE("transform_integrand conjugate symmetry") {
    const HwParams p = HwParams::from_r(1.0);
    const cplx u(5778.888085415544, 2000.0);
    LogComplex a = inv::transform_integrand(u, 0.05, p);
    LogComplex b = inv::transform_integrand(std::conj(u), 0.05, p);
    CHECK(b.log_modulus == doctest::Approx(a.log_modulus).epsilon(1e-13));
    CHECK(std::abs(hw::principal_phase(a.phase + b.phase)) < 1e-12);
}

TEST_CASE("transform_integrand at the t = 0.02 saddle matches the reference") {
    // u frozen to the offline bisection root of the saddle equation; the
    // log-modulus value comes from an arbitrary-precision evaluation of
    // t u + log I_nu(1) - log I_0(1) at nu = sqrt(2u).
    const HwParams p = HwParams::from_r(1.0);
    const double u0 = 52400.58539702616649026;
    LogComplex v = inv::transform_integrand(cplx(u0, 0.0), 0.02, p);
    CHECK(std::abs(v.log_modulus - (-727.8259140174608052101)) < 1e-8);
}

TEST_CASE("transform_integrand domain") {
    const HwParams p = HwParams::from_r(1.0);
    CHECK_THROWS_AS(inv::transform_integrand(cplx(-1.0, 5.0), 0.05, p), hw::domain_error);
    CHECK_THROWS_AS(inv::transform_integrand(cplx(0.0, 5.0), 0.05, p), hw::domain_error);
}

TEST_CASE("levy_oracle reproduces the closed form") {
    for (double t : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double lo = inv::levy_oracle(t).log_value;
        const double lc = hw::asymptotics::levy_density(t).log_value;
        CHECK(rel_linear(lo, lc) < 1e-8);
    }
}

TEST_CASE("levy_oracle explicit values") {
    const double g1 = std::exp(-0.5) / std::sqrt(2.0 * kPi);
    CHECK(*inv::levy_oracle(1.0).value == doctest::Approx(g1).epsilon(1e-8));
    const double g01 = std::exp(-5.0) / std::sqrt(2.0 * kPi * 1e-3);
    CHECK(*inv::levy_oracle(0.1).value == doctest::Approx(g01).epsilon(1e-8));
    const double g2 = std::exp(-0.25) / std::sqrt(2.0 * kPi * 8.0);
    CHECK(*inv::levy_oracle(2.0).value == doctest::Approx(g2).epsilon(1e-8));
}

TEST_CASE("levy_oracle tolerance failure surfaces as an error") {
    inv::ContourSpec spec;
    spec.rel_tol = 1e-15;
    spec.max_nodes = 20000;
    CHECK_THROWS_AS(inv::levy_oracle(1e-6, spec), hw::tolerance_not_met_error);
}

TEST_CASE("oracle_density matches the arbitrary-precision inversion") {
    struct Ref { double r, t, logf; };
    const std::vector<Ref> refs = {
        {1.0, 0.05, -179.0704393634969235532},
        {1.0, 0.02, -720.9251664179512783342},
        {1.0, 0.01, -1920.832689837070159866},
        {1.0, 0.005, -4909.688611467585980642},
        {0.5, 0.01, -2453.19548342620505465},
        {5.0, 0.01, -904.2703189240754513144},
        {1.0, 1.0, -0.5382681612763092952987},
    };
    for (const Ref& ref : refs) {
        const HwParams p = HwParams::from_r(ref.r);
        inv::OracleReport rep = inv::oracle_density_report(ref.t, p);
        CHECK(std::abs(rep.density.log_value - ref.logf) <
              std::max(1e-8, 1e-11 * std::abs(ref.logf)));
        CHECK(rep.rel_error_estimate <= 1e-10);
    }
}

TEST_CASE("oracle positivity across moderate t") {
    const HwParams p = HwParams::from_r(1.0);
    for (double t : {0.05, 0.02, 0.01}) {
        inv::OracleReport rep = inv::oracle_density_report(t, p);
        CHECK(std::isfinite(rep.density.log_value));
        CHECK(rep.evaluations > 0);
    }
}

TEST_CASE("oracle self-consistency under tolerance halving") {
    const HwParams p = HwParams::from_r(1.0);
    inv::ContourSpec coarse;
    coarse.rel_tol = 2e-9;
    inv::ContourSpec fine;
    fine.rel_tol = 1e-9;
    inv::OracleReport a = inv::oracle_density_report(0.02, p, coarse);
    inv::OracleReport b = inv::oracle_density_report(0.02, p, fine);
    CHECK(rel_linear(a.density.log_value, b.density.log_value) <= a.rel_error_estimate);
}

TEST_CASE("contour independence near the saddle") {
    // The integrand is analytic in Re(u) > 0, so the result cannot depend on
    // the abscissa; numerically, though, a contour away from the saddle pays
    // e^{K0(a) - K0(u0)} in cancellation. At t = 0.05 that factor is ~e^3 at
    // 0.8 u0 and ~e^23 at 0.5 u0 (still workable), but ~e^32 at 2 u0, beyond
    // double precision entirely - the engine must refuse rather than return
    // noise there.
    const HwParams p = HwParams::from_r(1.0);
    const double t = 0.05;
    const double u0 = hw::saddle::solve_saddle(t, p).u0;
    const double base = inv::oracle_density(t, p).log_value;

    for (double factor : {0.8, 1.25}) {
        inv::ContourSpec spec;
        spec.abscissa = factor * u0;
        const double shifted = inv::oracle_density(t, p, spec).log_value;
        CHECK(rel_linear(shifted, base) < 1e-9);
    }
    {
        inv::ContourSpec spec;
        spec.abscissa = 0.5 * u0;
        spec.rel_tol = 1e-3;  // the cancellation floor sits near 1e-4
        const double shifted = inv::oracle_density(t, p, spec).log_value;
        CHECK(rel_linear(shifted, base) < 1e-6);
    }
    {
        inv::ContourSpec spec;
        spec.abscissa = 2.0 * u0;
        spec.rel_tol = 1e-3;
        CHECK_THROWS_AS(inv::oracle_density(t, p, spec), hw::tolerance_not_met_error);
    }
}

TEST_CASE("oracle with a saddle-free abscissa default") {
    // r = 5 has no saddle at t = 1; the contour falls back to 1/t.
    const HwParams p = HwParams::from_r(5.0);
    inv::OracleReport rep = inv::oracle_density_report(1.0, p);
    CHECK(rep.abscissa == doctest::Approx(1.0));
    CHECK(std::isfinite(rep.density.log_value));
}

TEST_CASE("window restricted to |y| <= log(1/t)^2 t^{-3/2} captures most of the mass") {
    // At t = 0.01 the window covers erf(h sqrt(M)) ~ 99.32% of the Gaussian
    // mass around the saddle; the measured deficit matches that prediction.
    const HwParams p = HwParams::from_r(1.0);
    const double t = 0.01;
    const double L = std::log(1.0 / t);
    inv::ContourSpec window;
    window.half_width = L * L / std::pow(t, 1.5);
    const double full = inv::oracle_density(t, p).log_value;
    const double restricted = inv::oracle_density(t, p, window).log_value;
    const double gap = rel_linear(restricted, full);
    CHECK(gap > 5e-3);
    CHECK(gap < 9e-3);
}

TEST_CASE("gaussian completion of the local expansion at t = 0.01") {
    // Quadrature of exp(-M y^2) over the window against the closed forms:
    // the engine reproduces sqrt(pi/M) erf(h sqrt(M)) to near machine
    // precision, and the completion to sqrt(pi/M) carries the erf deficit.
    const HwParams p = HwParams::from_r(1.0);
    const double t = 0.01;
    hw::saddle::SaddleSolution sol = hw::saddle::solve_saddle(t, p);
    const double m = sol.m_exact;
    const double L = std::log(1.0 / t);
    const double h = L * L / std::pow(t, 1.5);

    auto q = hw::quadrature::integrate([m](double y) { return std::exp(-m * y * y); },
                                       -h, h, 1e-12, 0.0, 200000);
    CHECK(q.converged);
    const double truncated = std::sqrt(kPi / m) * std::erf(h * std::sqrt(m));
    CHECK(std::abs(q.value - truncated) <= 1e-9 * truncated);

    const double completed = std::sqrt(kPi / m);
    const double deficit = std::abs(q.value / completed - 1.0);
    CHECK(deficit > 5e-3);
    CHECK(deficit < 8e-3);
}

TEST_CASE("tail decay at the documented sample points") {
    inv::TailReport a = inv::check_tail_monotonicity(0.0, {std::exp(12.0)}, {kPi / 4.0});
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].decay_derivative < 0.0);
    CHECK(a.points[0].re_derivative > 0.0);
    CHECK(a.all_decaying());

    inv::TailReport b = inv::check_tail_monotonicity(3.0, {1e6}, {0.01});
    CHECK(b.points[0].decay_derivative < 0.0);
    CHECK(!b.points[0].below_proof_threshold);
}

TEST_CASE("tail decay derivative is odd in the signed imaginary part") {
    // Re(sqrt(u) log u) is even in Im(u), so its y-derivative flips sign
    // with the sign of the argument.
    const double m = std::exp(12.0);
    auto d = [&](double th) {
        const double x = m * std::cos(th);
        const double y = m * std::sin(th);
        const double step = 1e-6 * m;
        auto phi = [&](double yy) {
            const cplx u(x, yy);
            return (std::sqrt(u) * std::log(u)).real();
        };
        return (phi(y + step) - phi(y - step)) / (2.0 * step);
    };
    CHECK(d(kPi / 4.0) > 0.0);
    CHECK(d(-kPi / 4.0) < 0.0);
    CHECK(d(kPi / 4.0) == doctest::Approx(-d(-kPi / 4.0)).epsilon(1e-10));
}

TEST_CASE("tail check flags points below the proof threshold") {
    // log(e^12) + (-3) + 2 = 11 < 12: outside the lemma's sufficient
    // condition, though the decay itself still holds there.
    inv::TailReport rep =
        inv::check_tail_monotonicity(-3.0, {std::exp(12.0), 1e6}, {kPi / 8.0, kPi / 4.0});
    CHECK(rep.offending().size() == 2);
    CHECK(rep.all_decaying());
    CHECK_THROWS_AS(
        inv::check_tail_monotonicity(-3.0, {std::exp(12.0)}, {kPi / 4.0}, /*strict=*/true),
        hw::domain_error);
}

TEST_CASE("tail check input validation") {
    CHECK_THROWS_AS(inv::check_tail_monotonicity(0.0, {}, {0.5}), hw::domain_error);
    CHECK_THROWS_AS(inv::check_tail_monotonicity(0.0, {1e6}, {}), hw::domain_error);
    CHECK_THROWS_AS(inv::check_tail_monotonicity(0.0, {1e6}, {2.0}), hw::domain_error);
    CHECK_THROWS_AS(inv::check_tail_monotonicity(0.0, {-1.0}, {0.5}), hw::domain_error);
}
