#ifndef HW_LOG_COMPLEX_HPP
#define HW_LOG_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace hw {

// Log-space carrier for a nonzero complex value
//     z = exp(log_modulus) * exp(i * phase),
// with phase on the principal branch (-pi, pi]. Used wherever linear scale
// would overflow or underflow (I_nu(r) and Gamma(z) at large |nu|, densities
// at extreme t).
struct LogComplex {
    double log_modulus = 0.0;
    double phase = 0.0;
};

// Reduce an accumulated phase to (-pi, pi].
inline double principal_phase(double phi) {
    double p = std::remainder(phi, 2.0 * std::numbers::pi);
    if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
    return p;
}

inline LogComplex make_log_complex(double log_modulus, double raw_phase) {
    return LogComplex{log_modulus, principal_phase(raw_phase)};
}

// Log-space of a linear complex value (z must be nonzero and finite).
inline LogComplex log_of(std::complex<double> z) {
    return LogComplex{std::log(std::abs(z)), std::arg(z)};
}

// Linear value; overflows/underflows for |log_modulus| beyond double range.
inline std::complex<double> to_complex(const LogComplex& lc) {
    double m = std::exp(lc.log_modulus);
    return {m * std::cos(lc.phase), m * std::sin(lc.phase)};
}

inline LogComplex conj(const LogComplex& lc) {
    return LogComplex{lc.log_modulus, principal_phase(-lc.phase)};
}

} // namespace hw

#endif
