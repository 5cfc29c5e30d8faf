#include "hw/inversion.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hw/errors.hpp"
#include "hw/quadrature.hpp"
#include "hw/saddle.hpp"
#include "hw/specfun.hpp"

namespace hw::inversion {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kDecayEfolds = 40.0;  // truncation: log-modulus peak - 40

// Shared inversion driver. logf(y) returns the complex log of the integrand
// at u = a + iy; k0 = logf(0) must be real (positive integrand on the axis).
// phase_rate bounds d Im(logf)/dy from below at large y (the e^{ut} factor
// alone contributes t), giving a lower bound on the oscillation count.
OracleReport invert(const std::function<cplx(double)>& logf, double k0, double a,
                    double width_scale, double phase_rate, const ContourSpec& spec,
                    DensityKind kind) {
    if (!(spec.rel_tol > 0.0 && spec.rel_tol < 1.0))
        throw domain_error("inversion: rel_tol must lie in (0, 1)");

    double y_max;
    if (spec.half_width) {
        y_max = *spec.half_width;
        if (!(y_max > 0.0)) throw domain_error("inversion: half_width must be positive");
    } else {
        y_max = width_scale;
        int doublings = 0;
        while (logf(y_max).real() > k0 - kDecayEfolds) {
            y_max *= 2.0;
            if (++doublings > 200)
                throw non_convergence_error("inversion: could not locate the decay point");
        }
    }

    // Fewer than ~4 nodes per oscillation cannot converge at any tolerance;
    // fail fast instead of grinding the budget on an unresolvable contour.
    const double oscillations = phase_rate * y_max / (2.0 * kPi);
    if (4.0 * oscillations > static_cast<double>(spec.max_nodes)) {
        std::ostringstream os;
        os << "inversion: contour needs ~" << oscillations << " oscillations resolved, beyond "
           << spec.max_nodes << " nodes";
        throw tolerance_not_met_error(os.str(), std::numeric_limits<double>::infinity(),
                                      spec.rel_tol);
    }

    // Integrate exp(K(y) - K0) so the quadrature works near unit scale; K0 is
    // restored in log space afterwards.
    auto f = [&](double y) {
        const cplx d = logf(y) - k0;
        return std::exp(d.real()) * std::cos(d.imag());
    };
    quadrature::Result q = quadrature::integrate(f, 0.0, y_max, spec.rel_tol, 0.0, spec.max_nodes);

    // The Kronrod estimate cannot see round-off cancellation; account for it
    // explicitly through the ratio of |integrand| mass to the result.
    const double eps = std::numeric_limits<double>::epsilon();
    double rel_est = std::numeric_limits<double>::infinity();
    if (q.value > 0.0)
        rel_est = q.error_estimate / q.value + eps * q.abs_integral / q.value;
    if (!(q.value > 0.0) || rel_est > spec.rel_tol) {
        std::ostringstream os;
        os << "inversion: quadrature error " << rel_est << " above tolerance " << spec.rel_tol
           << " after " << q.evaluations << " evaluations";
        throw tolerance_not_met_error(os.str(), rel_est, spec.rel_tol);
    }

    OracleReport rep;
    rep.density = LogDensity::from_log(k0 + std::log(q.value) - std::log(kPi), kind);
    rep.abscissa = a;
    rep.half_width = y_max;
    rep.rel_error_estimate = rel_est;
    rep.evaluations = q.evaluations;
    return rep;
}

} // namespace

LogComplex transform_integrand(std::complex<double> u, double t, const HwParams& params) {
    if (!(u.real() > 0.0)) throw domain_error("transform_integrand: Re(u) must be positive");
    const cplx nu = std::sqrt(2.0 * u);
    const LogComplex li = specfun::log_bessel_i(nu, params.r);
    const double li0 = specfun::log_bessel_i0(params.r);
    return make_log_complex(u.real() * t + li.log_modulus - li0,
                            u.imag() * t + li.phase);
}

OracleReport oracle_density_report(double t, const HwParams& params, const ContourSpec& spec) {
    if (!(t > 0.0)) throw domain_error("oracle_density: t must be positive");

    double a;
    double width;
    if (spec.abscissa) {
        a = *spec.abscissa;
        if (!(a > 0.0)) throw domain_error("oracle_density: abscissa must be positive");
        width = a;
    } else {
        try {
            saddle::SaddleSolution sol = saddle::solve_saddle(t, params);
            a = sol.u0;
            width = 1.0 / std::sqrt(sol.m_exact);
        } catch (const domain_error&) {
            a = 1.0 / t;
            width = a;
        }
    }

    const double li0 = specfun::log_bessel_i0(params.r);
    auto logf = [&](double y) -> cplx {
        const cplx u(a, y);
        const LogComplex li = specfun::log_bessel_i(std::sqrt(2.0 * u), params.r);
        return cplx(a * t + li.log_modulus - li0, y * t + li.phase);
    };
    const double k0 = logf(0.0).real();
    return invert(logf, k0, a, width, t, spec, DensityKind::Oracle);
}

LogDensity oracle_density(double t, const HwParams& params, const ContourSpec& spec) {
    return oracle_density_report(t, params, spec).density;
}

OracleReport levy_oracle_report(double t, const ContourSpec& spec) {
    if (!(t > 0.0)) throw domain_error("levy_oracle: t must be positive");
    const double a = spec.abscissa ? *spec.abscissa : 1.0 / (2.0 * t * t);
    if (!(a > 0.0)) throw domain_error("levy_oracle: abscissa must be positive");

    auto logf = [&](double y) -> cplx {
        const cplx u(a, y);
        return u * t - std::sqrt(2.0 * u);
    };
    const double k0 = a * t - std::sqrt(2.0 * a);
    // Curvature of the exponent at the saddle: sqrt(2)/(8 a^(3/2)).
    const double width = std::sqrt(8.0 * a * std::sqrt(a) / std::sqrt(2.0));
    return invert(logf, k0, a, width, t, spec, DensityKind::Oracle);
}

LogDensity levy_oracle(double t, const ContourSpec& spec) {
    return levy_oracle_report(t, spec).density;
}

bool TailReport::all_decaying() const {
    for (const TailPoint& p : points)
        if (!(p.decay_derivative < 0.0)) return false;
    return !points.empty();
}

std::vector<std::size_t> TailReport::offending() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].below_proof_threshold) idx.push_back(i);
    return idx;
}

TailReport check_tail_monotonicity(double b, const std::vector<double>& moduli,
                                   const std::vector<double>& args, bool strict) {
    if (moduli.empty() || args.empty())
        throw domain_error("check_tail_monotonicity: grids must be non-empty");
    for (double m : moduli)
        if (!(m > 0.0)) throw domain_error("check_tail_monotonicity: |u| must be positive");
    for (double a : args)
        if (!(a > 0.0 && a <= kPi / 2.0))
            throw domain_error("check_tail_monotonicity: arg must lie in (0, pi/2]");

    TailReport rep;
    rep.b = b;
    std::ostringstream offenders;
    for (double m : moduli) {
        const bool below = std::log(m) + b + 2.0 < 12.0;
        for (double th : args) {
            TailPoint p;
            p.modulus = m;
            p.arg = th;
            p.below_proof_threshold = below;
            if (below) offenders << " (|u|=" << m << ", arg=" << th << ")";

            const double x = m * std::cos(th);
            const double y = m * std::sin(th);
            const double step = 1e-6 * m;
            auto phi = [&](double yy) {
                const cplx u(x, yy);
                const cplx su = std::sqrt(u);
                return (su * std::log(u) + b * su).real();
            };
            p.re_derivative = (phi(y + step) - phi(y - step)) / (2.0 * step);
            p.decay_derivative = -p.re_derivative / std::sqrt(2.0);
            rep.points.push_back(p);
        }
    }
    if (strict && !rep.offending().empty())
        throw domain_error("check_tail_monotonicity: points below the proof threshold "
                           "log|u| + B + 2 >= 12:" + offenders.str());
    return rep;
}

} // namespace hw::inversion
