#ifndef HW_ERRORS_HPP
#define HW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hw {

// Argument outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// log Gamma requested at (or numerically indistinguishable from) a pole.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The saddle equation t = log u/(2 sqrt(2u)) - rho/sqrt(2u) + 1/(4u) has no
// root in the region where the asymptotic formula is meaningful: t is too
// large for this r.
class no_saddle_error : public domain_error {
public:
    no_saddle_error(double r, double t, const std::string& what)
        : domain_error(what), r(r), t(t) {}
    double r;
    double t;
};

// log u0 <= 2 + 2 rho: the saddle is too shallow, the curvature M is not
// positive and the leading-order density formula does not apply.
class negative_curvature_error : public domain_error {
public:
    using domain_error::domain_error;
};

// An iteration exhausted its budget without reaching its tolerance.
class non_convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not push the error estimate below the requested
// tolerance within the node budget.
class tolerance_not_met_error : public std::runtime_error {
public:
    tolerance_not_met_error(const std::string& what, double achieved, double requested)
        : std::runtime_error(what), achieved(achieved), requested(requested) {}
    double achieved;
    double requested;
};

} // namespace hw

#endif
