#include "hw/asian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hw/asymptotics.hpp"
#include "hw/errors.hpp"
#include "hw/quadrature.hpp"
#include "hw/specfun.hpp"

namespace hw::asian {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesGuard = 1e3;  // largest r the Bessel series is rated for

double hw_log_density(double t, const HwParams& params, FMethod m,
                      const inversion::ContourSpec& contour) {
    switch (m) {
        case FMethod::Oracle:
            return inversion::oracle_density(t, params, contour).log_value;
        case FMethod::Main:
            return asymptotics::density_main(t, params).log_value;
        case FMethod::Rough:
            return asymptotics::density_rough(t, params).log_value;
        case FMethod::Auto:
            break;
    }
    throw domain_error("conditional_density: unresolved method");
}

DensityKind kind_of(FMethod m) {
    switch (m) {
        case FMethod::Oracle: return DensityKind::Oracle;
        case FMethod::Main: return DensityKind::Main;
        case FMethod::Rough: return DensityKind::Rough;
        case FMethod::Auto: break;
    }
    return DensityKind::Oracle;
}

} // namespace

FMethod resolve_method(FMethod m, double t) {
    if (m != FMethod::Auto) return m;
    return t >= 0.05 ? FMethod::Oracle : FMethod::Main;
}

LogDensity conditional_density(const GbmIntegralQuery& q, const inversion::ContourSpec& contour) {
    if (!(q.t > 0.0)) throw domain_error("conditional_density: t must be positive");
    if (!(q.u > 0.0)) throw domain_error("conditional_density: u must be positive");
    if (!std::isfinite(q.x)) throw domain_error("conditional_density: x must be finite");

    const double log_r = q.x - std::log(q.u);
    if (log_r > 700.0)
        throw domain_error("conditional_density: e^x/u overflows (|x| too large relative to log u)");
    const double r = std::exp(log_r);
    if (r > kSeriesGuard)
        throw domain_error("conditional_density: r = e^x/u exceeds the supported range (r <= 1e3)");

    const double e2x_over_2u = std::exp(2.0 * q.x - std::log(2.0 * q.u));
    if (!std::isfinite(e2x_over_2u))
        throw domain_error("conditional_density: e^{2x}/(2u) overflows");

    const HwParams params = HwParams::from_r(r);
    const FMethod m = resolve_method(q.method, q.t);
    const double log_f = hw_log_density(q.t, params, m, contour);

    const double lv = 0.5 * std::log(2.0 * kPi * q.t) - std::log(q.u)
                      + q.x * q.x / (2.0 * q.t) - 1.0 / (2.0 * q.u) - e2x_over_2u
                      + specfun::log_bessel_i0(r) + log_f;
    return LogDensity::from_log(lv, kind_of(m));
}

LogDensity marginal_density(double t, double nu, double u, FMethod method,
                            const XQuadSpec& xquad, const inversion::ContourSpec& contour) {
    if (!(t > 0.0)) throw domain_error("marginal_density: t must be positive");
    if (!(u > 0.0)) throw domain_error("marginal_density: u must be positive");

    const double sigma = std::sqrt(t);
    const double lo = xquad.lo ? *xquad.lo : nu * t - 8.0 * sigma;
    const double hi = xquad.hi ? *xquad.hi : nu * t + 8.0 * sigma;
    if (!(lo < hi)) throw domain_error("marginal_density: empty x window");

    // log of conditional(u | x) * gaussian(x; nu t, t); -inf where the
    // conditional cannot be evaluated (negligible-mass regions, see header).
    // When the oracle's cancellation floor blocks the requested tolerance the
    // point is retried once at the achievable tolerance (capped at 1e-2, i.e.
    // two significant digits); by then the integrand is orders of magnitude
    // below its peak, so the loss stays under the x tolerance.
    auto log_integrand = [&](double x) {
        const GbmIntegralQuery q{t, nu, x, u, method};
        double lc;
        try {
            lc = conditional_density(q, contour).log_value;
        } catch (const tolerance_not_met_error& e) {
            if (!(e.achieved < 1e-2)) return -std::numeric_limits<double>::infinity();
            inversion::ContourSpec relaxed = contour;
            relaxed.rel_tol = std::min(1e-2, 10.0 * e.achieved);
            try {
                lc = conditional_density(q, relaxed).log_value;
            } catch (const std::exception&) {
                return -std::numeric_limits<double>::infinity();
            }
        } catch (const domain_error&) {
            return -std::numeric_limits<double>::infinity();
        } catch (const non_convergence_error&) {
            return -std::numeric_limits<double>::infinity();
        }
        const double z = x - nu * t;
        return lc - 0.5 * std::log(2.0 * kPi * t) - z * z / (2.0 * t);
    };

    // Locate the integrand's peak on a coarse scan. Evaluation failures sit
    // on the large-r side (r = e^x/u grows with x, and so does the
    // inversion's cancellation), so the integration window is clamped at the
    // first failing scan point past the last finite one; beyond it the
    // integrand is zero-filled anyway and every probe there costs a full
    // failed inversion.
    const int kScan = 33;
    const double step = (hi - lo) / (kScan - 1);
    double peak = -std::numeric_limits<double>::infinity();
    double clamp = hi;
    bool any_finite = false;
    for (int i = 0; i < kScan; ++i) {
        const double x = lo + step * i;
        const double l = log_integrand(x);
        if (std::isfinite(l)) {
            peak = std::max(peak, l);
            any_finite = true;
            clamp = hi;
        } else if (any_finite && clamp == hi) {
            clamp = x;
        }
    }
    if (!any_finite)
        throw domain_error("marginal_density: integrand vanished on the whole x window");
    const double hi_eff = clamp;

    auto f = [&](double x) {
        const double l = log_integrand(x);
        return std::isfinite(l) ? std::exp(l - peak) : 0.0;
    };
    quadrature::Result q =
        quadrature::integrate(f, lo, hi_eff, xquad.rel_tol, 0.0, xquad.max_nodes);
    if (!(q.value > 0.0) || !q.converged)
        throw tolerance_not_met_error("marginal_density: x quadrature did not converge",
                                      q.value > 0.0 ? q.error_estimate / q.value : 1.0,
                                      xquad.rel_tol);

    return LogDensity::from_log(peak + std::log(q.value), kind_of(resolve_method(method, t)));
}

} // namespace hw::asian
