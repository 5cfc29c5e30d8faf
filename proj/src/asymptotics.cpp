#include "hw/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "hw/errors.hpp"
#include "hw/specfun.hpp"

namespace hw::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;
}

LogDensity density_main(const saddle::SaddleSolution& sol, const HwParams& params) {
    const double u0 = sol.u0;
    const double logu = std::log(u0);
    const double lv = 0.5 - std::log(kPi) - specfun::log_bessel_i0(params.r)
                      + 0.5 * (logu - std::log(logu - 2.0 - 2.0 * params.rho))
                      - sol.t * u0 + std::sqrt(2.0 * u0);
    return LogDensity::from_log(lv, DensityKind::Main);
}

LogDensity density_main(double t, const HwParams& params) {
    return density_main(saddle::solve_saddle(t, params), params);
}

LogDensity density_rough(const saddle::SaddleSolution& sol, const HwParams& params) {
    if (!(sol.t < 1.0)) throw domain_error("density_rough: t must be < 1");
    const double L = std::log(1.0 / sol.t);
    const double lv = 0.5 - std::log(2.0 * kPi) - specfun::log_bessel_i0(params.r)
                      + 0.5 * std::log(L) - std::log(sol.t)
                      - sol.t * sol.u0 + std::sqrt(2.0 * sol.u0);
    return LogDensity::from_log(lv, DensityKind::Rough);
}

LogDensity density_rough(double t, const HwParams& params) {
    if (!(t > 0.0) || !(t < 1.0)) throw domain_error("density_rough: t must lie in (0, 1)");
    return density_rough(saddle::solve_saddle(t, params), params);
}

double exponent_expansion(double t, const HwParams& params) {
    if (!(t > 0.0) || !(t < std::exp(-1.0)))
        throw domain_error("exponent_expansion: t must lie in (0, 1/e)");
    const double L = std::log(1.0 / t);
    return -L * L / (2.0 * t) - L * std::log(L) / t
           + (1.0 + params.rho + 0.5 * std::log(2.0)) * L / t;
}

double log_density_crude(double t) {
    if (!(t > 0.0) || !(t < 1.0)) throw domain_error("log_density_crude: t must lie in (0, 1)");
    const double L = std::log(1.0 / t);
    return -L * L / (2.0 * t);
}

LogDensity levy_density(double t) {
    if (!(t > 0.0)) throw domain_error("levy_density: t must be positive");
    const double lv = -0.5 * std::log(2.0 * kPi) - 1.5 * std::log(t) - 1.0 / (2.0 * t);
    return LogDensity::from_log(lv, DensityKind::Closed);
}

} // namespace hw::asymptotics
