#ifndef HW_ASIAN_HPP
#define HW_ASIAN_HPP

#include <cstddef>
#include <optional>

#include "hw/inversion.hpp"
#include "hw/log_density.hpp"

namespace hw::asian {

// Which Hartman-Watson evaluation backs the conditional density. Auto
// resolves to Oracle for t >= 0.05 and Main below.
enum class FMethod { Oracle, Main, Rough, Auto };

// Query for the density of A_t = Int_0^t exp(2(W_h + nu h)) dh at the point u,
// conditional on W_t + nu t = x. The drift enters only through x.
struct GbmIntegralQuery {
    double t = 1.0;
    double nu = 0.0;
    double x = 0.0;
    double u = 1.0;
    FMethod method = FMethod::Auto;
};

FMethod resolve_method(FMethod m, double t);

// Yor's conditional density, assembled in log space:
//     (sqrt(2 pi t)/u) exp(x^2/(2t) - (1+e^{2x})/(2u)) I_0(e^x/u) f_{e^x/u}(t).
// The Hartman-Watson factor is computed at r = e^x/u by the resolved method.
// Throws domain_error when e^x/u overflows or exceeds the series guard
// (r <= 1e3); propagates saddle/quadrature errors from the f evaluation.
LogDensity conditional_density(const GbmIntegralQuery& q,
                               const inversion::ContourSpec& contour = {});

// x-integration window and tolerance for the marginal. Unset bounds default
// to nu t -+ 8 sqrt(t) (Gaussian mass beyond is < 1e-15).
struct XQuadSpec {
    std::optional<double> lo;
    std::optional<double> hi;
    double rel_tol = 1e-6;
    std::size_t max_nodes = 20000;
};

// Density of A_t at u after integrating the conditional against the Gaussian
// law of W_t + nu t. x-regions where the conditional is unavailable (r above
// the series guard, no saddle, quadrature failure) are treated as zero mass;
// the prefactor exp(-(1-e^x)^2/(2u)) together with the decay of f_r(t) in r
// keeps their true contribution far below the quadrature tolerance.
LogDensity marginal_density(double t, double nu, double u, FMethod method = FMethod::Auto,
                            const XQuadSpec& xquad = {},
                            const inversion::ContourSpec& contour = {});

} // namespace hw::asian

#endif
