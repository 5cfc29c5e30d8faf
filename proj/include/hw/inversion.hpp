#ifndef HW_INVERSION_HPP
#define HW_INVERSION_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "hw/log_complex.hpp"
#include "hw/log_density.hpp"
#include "hw/params.hpp"

namespace hw::inversion {

// Vertical Bromwich contour description. Unset abscissa defaults to the exact
// saddle u0(t) when it exists, else to 1/t; unset half_width is chosen so the
// integrand's log-modulus at the truncation point sits 40 below its peak.
struct ContourSpec {
    std::optional<double> abscissa;
    std::optional<double> half_width;
    double rel_tol = 1e-10;
    std::size_t max_nodes = 500000;
};

// Log-space value of e^{ut} I_sqrt(2u)(r) / I_0(r) with sqrt(2u) on the
// principal branch. Requires Re(u) > 0.
LogComplex transform_integrand(std::complex<double> u, double t, const HwParams& params);

struct OracleReport {
    LogDensity density;
    double abscissa = 0.0;
    double half_width = 0.0;
    double rel_error_estimate = 0.0;  // quadrature estimate plus cancellation floor
    std::size_t evaluations = 0;
};

// Bromwich inversion f_r(t) = (1/pi) Int_0^Y Re exp(transform_integrand(a+iy)) dy,
// by adaptive quadrature (conjugate symmetry halves the contour). Throws
// tolerance_not_met_error when the error estimate cannot be pushed below
// spec.rel_tol within spec.max_nodes, and propagates no_saddle_error only if
// an explicit abscissa request needs a saddle that does not exist.
OracleReport oracle_density_report(double t, const HwParams& params, const ContourSpec& spec = {});
LogDensity oracle_density(double t, const HwParams& params, const ContourSpec& spec = {});

// Same engine applied to the Levy transform e^{-sqrt(2u)}; recovers the
// closed-form Levy density, which validates the quadrature machinery.
// Default abscissa is the exponent's exact saddle 1/(2 t^2).
OracleReport levy_oracle_report(double t, const ContourSpec& spec = {});
LogDensity levy_oracle(double t, const ContourSpec& spec = {});

// One grid point of the tail-decay check. The integrand's Bessel tail factor
// is exp(-(sqrt(u) log u + B sqrt(u))/sqrt(2)); decay_derivative is the
// centered finite difference of its log-modulus w.r.t. y = Im(u) at fixed
// Re(u), and re_derivative the same for Re(sqrt(u) log u + B sqrt(u)) itself
// (the two differ by the factor -1/sqrt(2)).
struct TailPoint {
    double modulus = 0.0;
    double arg = 0.0;
    double re_derivative = 0.0;
    double decay_derivative = 0.0;
    bool below_proof_threshold = false;  // log|u| + B + 2 < 12
};

struct TailReport {
    double b = 0.0;
    std::vector<TailPoint> points;
    bool all_decaying() const;                  // every decay_derivative < 0
    std::vector<std::size_t> offending() const; // indices below the proof threshold
};

// Evaluates the decay of the integrand tail factor on the grid
// {|u| in moduli} x {arg(u) in args}, args in (0, pi/2]. With strict = true a
// point below the proof threshold log|u| + B + 2 >= 12 raises domain_error
// listing the offenders; otherwise such points are evaluated and flagged.
TailReport check_tail_monotonicity(double b, const std::vector<double>& moduli,
                                   const std::vector<double>& args, bool strict = false);

} // namespace hw::inversion

#endif
