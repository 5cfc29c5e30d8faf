#ifndef HW_ASYMPTOTICS_HPP
#define HW_ASYMPTOTICS_HPP

#include "hw/log_density.hpp"
#include "hw/params.hpp"
#include "hw/saddle.hpp"

namespace hw::asymptotics {

// Leading term of the saddle-point density formula, in log space:
//     log f = 1/2 - log pi - log I_0(r)
//             + (log u0 - log(log u0 - 2 - 2 rho)) / 2 - t u0 + sqrt(2 u0).
// Propagates no_saddle_error / negative_curvature_error from the solve.
LogDensity density_main(double t, const HwParams& params);
LogDensity density_main(const saddle::SaddleSolution& sol, const HwParams& params);

// Simplified leading term with the log(1/t)^(1/2)/t prefactor. Requires t < 1.
LogDensity density_rough(double t, const HwParams& params);
LogDensity density_rough(const saddle::SaddleSolution& sol, const HwParams& params);

// Three-term expansion of the exponent -t u0 + sqrt(2 u0):
//     -log(1/t)^2/(2t) - log(1/t) loglog(1/t)/t + (1 + rho + log(2)/2) log(1/t)/t.
// Domain (0, 1/e); throws domain_error outside.
double exponent_expansion(double t, const HwParams& params);

// Leading log-asymptotics, r-independent: log f = -log(1/t)^2 / (2t).
// Domain (0, 1); throws domain_error outside.
double log_density_crude(double t);

// Levy density g(t) = (2 pi t^3)^(-1/2) exp(-1/(2t)), the alpha = 1/2 stable
// reference law, in log space.
LogDensity levy_density(double t);

} // namespace hw::asymptotics

#endif
