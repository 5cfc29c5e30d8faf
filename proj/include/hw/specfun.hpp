#ifndef HW_SPECFUN_HPP
#define HW_SPECFUN_HPP

#include <complex>

#include "hw/log_complex.hpp"

namespace hw::specfun {

// Principal-branch log Gamma(z) as a log-space value: log_modulus = log|Gamma(z)|,
// phase = arg Gamma(z) in (-pi, pi]. Supported off the non-positive real axis;
// throws pole_error when z is (numerically) a non-positive integer.
LogComplex log_gamma(std::complex<double> z);

// log Gamma(z) as a plain complex number Re + i Im, continuous for Re(z) > 0.
// Internal building block for series work where the phase must accumulate
// without reduction; the 2 pi k ambiguity is harmless once exponentiated.
std::complex<double> log_gamma_raw(std::complex<double> z);

// log I_nu(r) by the ascending series
//     I_nu(r) = sum_k (r/2)^(2k+nu) / (k! Gamma(k+nu+1)),
// summed in fixed ascending order from the k = 0 term with the multiplicative
// term recurrence, rescaling as needed. Truncates when a term falls below
// 1e-18 of the partial sum. Requires Re(nu) >= 0 and r > 0; throws
// non_convergence_error if 1e4 terms do not satisfy the criterion (cannot
// happen for r <= 1e3).
LogComplex log_bessel_i(std::complex<double> nu, double r);

// Leading term of the large-order expansion:
//     I_nu(r) ~ (r/2)^nu e^nu nu^(-nu-1/2) / sqrt(2 pi).
// Valid for large |nu| with arg(nu) bounded away from +-pi; throws
// domain_error when arg(nu) is within 0.1 rad of +-pi.
LogComplex log_bessel_i_asymptotic(std::complex<double> nu, double r);

// log I_0(r) for real r > 0.
double log_bessel_i0(double r);

} // namespace hw::specfun

#endif
