#ifndef HW_PARAMS_HPP
#define HW_PARAMS_HPP

#include <cmath>

#include "hw/errors.hpp"

namespace hw {

// Parameters of the Hartman-Watson transform I_sqrt(2u)(r) / I_0(r).
// rho = log(r / (2 sqrt(2))) is the constant appearing throughout the
// saddle-point analysis; it is derived from r once, here.
struct HwParams {
    double r;
    double rho;

    static HwParams from_r(double r) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw domain_error("HwParams: r must be positive and finite");
        return HwParams{r, std::log(r / (2.0 * std::sqrt(2.0)))};
    }
};

} // namespace hw

#endif
