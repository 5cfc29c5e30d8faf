#ifndef HW_QUADRATURE_HPP
#define HW_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace hw::quadrature {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;   // absolute
    double abs_integral = 0.0;     // estimate of integral of |f|, for cancellation checks
    std::size_t evaluations = 0;
    bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]: repeatedly splits the
// segment with the largest error estimate until the accumulated estimate is
// below max(abs_tol, rel_tol |value|) or the evaluation budget runs out.
// Deterministic: segments are ordered by (error, insertion index) and the
// final value is summed over segments sorted by left endpoint.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, std::size_t max_evaluations);

} // namespace hw::quadrature

#endif
