#ifndef HW_SADDLE_HPP
#define HW_SADDLE_HPP

#include "hw/params.hpp"

namespace hw::saddle {

// Root data for the saddle equation t = log u/(2 sqrt(2u)) - rho/sqrt(2u) + 1/(4u).
// u0 is the largest root; the right-hand side is strictly decreasing there and
// log u0 - 2 - 2 rho > 0 (equivalently m_exact > 0).
struct SaddleSolution {
    double t = 0.0;
    double u0 = 0.0;
    double residual = 0.0;  // saddle_rhs(u0) - t
    int iterations = 0;
    double m_exact = 0.0;   // curvature M at u0
};

// Right-hand side of the saddle equation, exactly as written.
double saddle_rhs(double u, const HwParams& params);

// d/du of saddle_rhs; used by the Newton polish and the slope checks.
double saddle_rhs_derivative(double u, const HwParams& params);

// Largest root of saddle_rhs(u) = t. Brackets to the right of the RHS peak
// (or of the curvature boundary e^(2+2 rho) when the peak does not exist),
// doubles the upper end until it crosses, then bisects and polishes with
// Newton to |residual| <= 1e-12 t. Initial guess from u0_bootstrap for
// t < 0.05. Root finding runs in linear u for t >= 1e-8 and in log u below,
// so t = 1e-50 stays in range. Throws no_saddle_error when no root exists in
// the admissible region, negative_curvature_error when the root is too
// shallow, non_convergence_error after 200 iterations.
SaddleSolution solve_saddle(double t, const HwParams& params);

// Bootstrap expansion of the largest root for 0 < t < 1:
//     (log(1/t)^2 / (2 t^2)) (1 + 2 loglog(1/t)/log(1/t) - (2 rho + log 2)/log(1/t)).
// For t >= 1/e only the leading factor is returned (loglog undefined there).
double u0_bootstrap(double t, const HwParams& params);

// Curvature M = sqrt(2) log u0 / (16 u0^(3/2)) - sqrt(2)(1+rho) / (8 u0^(3/2)).
// Equals sqrt(2)/(16 u0^(3/2)) (log u0 - 2 - 2 rho); throws
// negative_curvature_error when log u0 <= 2 + 2 rho.
double curvature_m(double u0, const HwParams& params);

// LHS - RHS of the identity -1/2 sqrt(2 u0) log u0 = -2 u0 t - rho sqrt(2 u0) + 1/2,
// which holds exactly at roots of the saddle equation. Diagnostic:
// |difference| <= 1e-9 (1 + 2 u0 t) at any solve_saddle output.
double from_sp_identity(const SaddleSolution& sol, const HwParams& params);

} // namespace hw::saddle

#endif
