#include "hw/saddle.hpp"

#include <cmath>

#include "hw/errors.hpp"

namespace hw::saddle {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// RHS evaluated at u = exp(v) without forming u, for the log-space solver.
double rhs_of_log(double v, double rho) {
    const double w = std::exp(-0.5 * v);  // u^(-1/2)
    return v * w / (2.0 * kSqrt2) - rho * w / kSqrt2 + w * w / 4.0;
}

// d/dv of rhs_of_log.
double rhs_of_log_derivative(double v, double rho) {
    const double w = std::exp(-0.5 * v);
    return w * (2.0 + 2.0 * rho - v) / (4.0 * kSqrt2) - w * w / 4.0;
}

// Rightmost local maximizer of the RHS, which exists iff 2 e^rho > sqrt(2)
// (r > 2): the root of psi(u) = sqrt(u)(2 + 2 rho - log u) - sqrt(2) in
// (e^(2 rho), e^(2+2 rho)), where psi decreases monotonically.
bool rhs_peak(const HwParams& params, double* peak) {
    if (2.0 * std::exp(params.rho) <= kSqrt2) return false;
    double lo = 2.0 * params.rho;            // log u at the psi maximum
    double hi = 2.0 + 2.0 * params.rho;      // log u where psi = -sqrt(2)
    auto psi = [&](double v) {
        return std::exp(0.5 * v) * (2.0 + 2.0 * params.rho - v) - kSqrt2;
    };
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (psi(mid) > 0.0 ? lo : hi) = mid;
    }
    *peak = std::exp(0.5 * (lo + hi));
    return true;
}

// Safeguarded Newton on a strictly decreasing function f over [lo, hi] with
// f(lo) >= 0 >= f(hi). After the tolerance is met, a few unconstrained Newton
// steps push the residual to its round-off floor while they keep improving.
template <typename F, typename DF>
double newton_bisect(F f, DF df, double lo, double hi, double guess, double tol, int* iters) {
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    double fx = f(x);
    int n = 0;
    for (; n < 200 && std::abs(fx) > tol; ++n) {
        (fx > 0.0 ? lo : hi) = x;
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
        fx = f(x);
    }
    if (std::abs(fx) > tol)
        throw non_convergence_error("solve_saddle: Newton did not reach tolerance in 200 iterations");
    for (int k = 0; k < 3 && fx != 0.0; ++k) {
        const double d = df(x);
        if (d == 0.0) break;
        const double next = x - fx / d;
        const double fnext = f(next);
        if (!(std::abs(fnext) < std::abs(fx))) break;
        x = next;
        fx = fnext;
        ++n;
    }
    *iters = n;
    return x;
}

} // namespace

double saddle_rhs(double u, const HwParams& params) {
    if (!(u > 0.0)) throw domain_error("saddle_rhs: u must be positive");
    const double s = std::sqrt(2.0 * u);
    return std::log(u) / (2.0 * s) - params.rho / s + 1.0 / (4.0 * u);
}

double saddle_rhs_derivative(double u, const HwParams& params) {
    const double u32 = u * std::sqrt(u);
    return (2.0 + 2.0 * params.rho - std::log(u)) / (4.0 * kSqrt2 * u32) - 1.0 / (4.0 * u * u);
}

SaddleSolution solve_saddle(double t, const HwParams& params) {
    if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("solve_saddle: t must be positive");
    const double rho = params.rho;

    // Left edge of the admissible region: the rightmost RHS peak when there is
    // one, else the curvature boundary e^(2+2 rho). Right of it the RHS
    // decreases strictly to zero, so the crossing there is the largest root.
    double peak = 0.0;
    const bool has_peak = rhs_peak(params, &peak);
    const double left = has_peak ? peak : std::exp(2.0 + 2.0 * rho);
    if (saddle_rhs(left, params) < t)
        throw no_saddle_error(params.r, t, "no saddle: t too large for this r");

    double guess = 0.0;
    if (t < 0.05) guess = u0_bootstrap(t, params);

    int iters = 0;
    double u0 = 0.0;
    if (t >= 1e-8) {
        double hi = std::max(2.0 * left, guess > left ? 2.0 * guess : 0.0);
        int doublings = 0;
        while (saddle_rhs(hi, params) >= t) {
            hi *= 2.0;
            if (++doublings > 2100)
                throw non_convergence_error("solve_saddle: bracket expansion failed");
        }
        auto f = [&](double u) { return saddle_rhs(u, params) - t; };
        auto df = [&](double u) { return saddle_rhs_derivative(u, params); };
        u0 = newton_bisect(f, df, left, hi, guess, 1e-12 * t, &iters);
    } else {
        // Solve for v = log u so the iteration never forms u itself.
        const double vleft = std::log(left);
        double vhi = (guess > left) ? std::log(guess) + std::log(2.0) : vleft + std::log(2.0);
        int doublings = 0;
        while (rhs_of_log(vhi, rho) >= t) {
            vhi += std::log(2.0);
            if (++doublings > 4000)
                throw non_convergence_error("solve_saddle: bracket expansion failed");
        }
        auto f = [&](double v) { return rhs_of_log(v, rho) - t; };
        auto df = [&](double v) { return rhs_of_log_derivative(v, rho); };
        const double vguess = guess > left ? std::log(guess) : 0.5 * (vleft + vhi);
        const double v0 = newton_bisect(f, df, vleft, vhi, vguess, 1e-12 * t, &iters);
        u0 = std::exp(v0);
        if (!std::isfinite(u0))
            throw domain_error("solve_saddle: root exceeds double range (t too small)");
    }

    SaddleSolution sol;
    sol.t = t;
    sol.u0 = u0;
    sol.residual = saddle_rhs(u0, params) - t;
    sol.iterations = iters;
    sol.m_exact = curvature_m(u0, params);
    return sol;
}

double u0_bootstrap(double t, const HwParams& params) {
    if (!(t > 0.0) || t >= 1.0) throw domain_error("u0_bootstrap: t must lie in (0, 1)");
    const double L = std::log(1.0 / t);
    const double lead = 0.5 * (L / t) * (L / t);
    if (L <= 1.0) return lead;
    return lead * (1.0 + 2.0 * std::log(L) / L - (2.0 * params.rho + std::log(2.0)) / L);
}

double curvature_m(double u0, const HwParams& params) {
    if (!(u0 > 0.0)) throw domain_error("curvature_m: u0 must be positive");
    const double logu = std::log(u0);
    if (logu <= 2.0 + 2.0 * params.rho)
        throw negative_curvature_error("curvature_m: log u0 <= 2 + 2 rho, saddle too shallow "
                                       "(t not small enough)");
    const double u32 = u0 * std::sqrt(u0);
    return kSqrt2 * logu / (16.0 * u32) - kSqrt2 * (1.0 + params.rho) / (8.0 * u32);
}

double from_sp_identity(const SaddleSolution& sol, const HwParams& params) {
    const double s = std::sqrt(2.0 * sol.u0);
    const double lhs = -0.5 * s * std::log(sol.u0);
    const double rhs = -2.0 * sol.u0 * sol.t - params.rho * s + 0.5;
    return lhs - rhs;
}

} // namespace hw::saddle
