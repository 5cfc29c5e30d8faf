#ifndef HW_LOG_DENSITY_HPP
#define HW_LOG_DENSITY_HPP

#include <cfloat>
#include <cmath>
#include <optional>

namespace hw {

// How a density value was produced.
enum class DensityKind {
    Main,    // leading term of the saddle-point formula
    Rough,   // simplified leading term with log(1/t)^(1/2)/t prefactor
    Crude,   // exp(-log(1/t)^2 / (2t)) log-asymptotics
    Oracle,  // numerical Bromwich inversion
    Closed,  // closed form (Levy density)
};

// A strictly positive density carried in log space. `value` is filled only
// when exp(log_value) is a normal, finite double.
struct LogDensity {
    double log_value = 0.0;
    std::optional<double> value;
    DensityKind method = DensityKind::Main;

    static LogDensity from_log(double log_value, DensityKind method) {
        LogDensity d;
        d.log_value = log_value;
        d.method = method;
        double v = std::exp(log_value);
        if (std::isfinite(v) && v >= DBL_MIN) d.value = v;
        return d;
    }
};

inline const char* to_string(DensityKind k) {
    switch (k) {
        case DensityKind::Main: return "main";
        case DensityKind::Rough: return "rough";
        case DensityKind::Crude: return "crude";
        case DensityKind::Oracle: return "oracle";
        case DensityKind::Closed: return "closed";
    }
    return "?";
}

} // namespace hw

#endif
