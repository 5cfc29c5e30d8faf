#include "hw/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "hw/errors.hpp"

namespace hw::specfun {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosP[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log Gamma for Re(z) >= 0.5 via the Lanczos sum, evaluated in log form so
// large |z| never leaves log space.
cplx log_gamma_positive(cplx z) {
    z -= 1.0;
    cplx x = kLanczosP[0];
    for (int i = 1; i < 9; ++i) x += kLanczosP[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z), stable for large |Im z| where sin overflows linearly.
cplx log_sin_pi(cplx z) {
    const cplx i(0.0, 1.0);
    const cplx log_half_i(-std::log(2.0), 0.5 * kPi);  // log(i/2)
    if (z.imag() > 1.0) {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) * (i/2)
        return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) + log_half_i;
    }
    if (z.imag() < -1.0) {
        // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2 i)
        return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) - std::log(2.0 * i);
    }
    return std::log(std::sin(kPi * z));
}

bool near_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double n = std::round(z.real());
    return n <= 0.0 && std::abs(z.real() - n) <= 1e-12 * std::max(1.0, std::abs(z.real()));
}

} // namespace

std::complex<double> log_gamma_raw(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z))
        throw pole_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_positive(z);
    // Reflection, kept in log space: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_positive(1.0 - z);
}

LogComplex log_gamma(std::complex<double> z) {
    cplx lg = log_gamma_raw(z);
    return make_log_complex(lg.real(), lg.imag());
}

LogComplex log_bessel_i(std::complex<double> nu, double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw domain_error("log_bessel_i: r must be positive and finite");
    if (nu.real() < 0.0)
        throw domain_error("log_bessel_i: Re(nu) must be >= 0");

    const cplx term0_log = nu * std::log(r / 2.0) - log_gamma_raw(nu + 1.0);
    const double q = (r / 2.0) * (r / 2.0);

    // Series relative to the k = 0 term: sum of p_k with p_0 = 1 and
    // p_k = p_{k-1} * q / (k (nu + k)). Fixed ascending order; rescaled by
    // `offset` whenever the partial sum grows, so large-r cases where the
    // terms peak far above the first one stay in range.
    cplx p(1.0, 0.0);
    cplx s(1.0, 0.0);
    double offset = 0.0;
    constexpr std::size_t kMaxTerms = 10000;
    bool converged = false;
    for (std::size_t k = 1; k <= kMaxTerms; ++k) {
        const cplx ratio = q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        p *= ratio;
        s += p;
        const double sa = std::abs(s);
        if (sa > 1e200) {
            offset += std::log(sa);
            p /= sa;
            s /= sa;
        }
        if (std::abs(ratio) < 1.0 && std::abs(p) <= 1e-18 * std::abs(s)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw non_convergence_error("log_bessel_i: series did not meet the truncation criterion "
                                    "in 1e4 terms (r too large?)");

    const double log_mod = term0_log.real() + offset + std::log(std::abs(s));
    const double raw_phase = term0_log.imag() + std::arg(s);
    return make_log_complex(log_mod, raw_phase);
}

LogComplex log_bessel_i_asymptotic(std::complex<double> nu, double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw domain_error("log_bessel_i_asymptotic: r must be positive and finite");
    const double a = std::arg(nu);
    if (kPi - std::abs(a) < 0.1)
        throw domain_error("log_bessel_i_asymptotic: arg(nu) too close to +-pi");
    const cplx lognu = std::log(nu);
    const cplx v = nu * std::log(r / 2.0) + nu - (nu + 0.5) * lognu - 0.5 * std::log(2.0 * kPi);
    return make_log_complex(v.real(), v.imag());
}

double log_bessel_i0(double r) {
    return log_bessel_i(std::complex<double>(0.0, 0.0), r).log_modulus;
}

} // namespace hw::specfun
