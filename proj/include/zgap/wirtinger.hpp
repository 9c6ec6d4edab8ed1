// wirtinger.hpp
//
// The polynomial weight G(u) = (2l-1) sum_{h=1}^{l} C(l,h) v_h u^{2h} (with
// v_l = 1) and the equation that fixes the constant lambda of the generalised
// Wirtinger inequality, in both its logarithmic and its rational form.

#pragma once

#include "zgap/quadrature.hpp"

#include <optional>
#include <vector>

namespace zgap {

struct WirtingerParams {
    long l = 0;
    std::vector<double> v;  // v_1 .. v_{l-1}; v_l = 1 is implicit
    double lambda = 0.0;

    /// v_h for h = 1..l, with v_l = 1.
    double v_at(long h) const;
};

/// Throws std::invalid_argument unless l >= 1 and v has l - 1 entries.
void validate(const WirtingerParams& params);

double g_eval(const WirtingerParams& params, double u);
double g_derivative(const WirtingerParams& params, double u);

struct MonotoneCheck {
    bool monotone = false;
    bool by_sign_condition = false;  // all v_h >= 0, no sampling needed
    std::optional<double> witness;   // u with G'(u) <= 0, when found
};

/// True when all v_h >= 0; otherwise samples G' on a geometric grid over
/// [1e-6, 1e6] and reports the first point where it is not positive.
MonotoneCheck g_monotone_check(const WirtingerParams& params);

/// int_0^inf log(1 + G(u) / ((2l-1) lambda)) du / u^2 - l pi. The returned
/// value is the residual; error_estimate is the quadrature's.
QuadratureResult lambda_residual(const WirtingerParams& params, double tol);

/// Root in lambda of the residual above, by bracketing and bisection on the
/// decreasing residual. Throws std::runtime_error if no bracket is found.
double lambda_solve(const std::vector<double>& v, long l, double tol);

/// int_R (sum_h C(l-1,h-1) v_h u^{2h-2}) / (u^{2l} + sum_{h<l} C(l,h) v_h u^{2h} + lambda) du - pi.
QuadratureResult rational_integral_check(const WirtingerParams& params, double tol);

/// Positive root X of sum_{h=1}^{l} (2l-1)/(2h-1) C(l,h) B_h v_h X^h = (2l-1) lambda B_0
/// by bisection on (0, 1000]. capB holds B_0..B_l.
double x_root(const std::vector<double>& v, double lambda, const std::vector<double>& capB, long l, double tol);

}  // namespace zgap
