// quadrature.hpp
//
// Integration over the positive half line. The domain is mapped by
// u = s / (1 - s) and the unit interval is handled by the double-exponential
// substitution s = (1 + tanh(pi/2 sinh t)) / 2, which together give
// u = exp(pi sinh t). Each level halves the step and reuses earlier nodes;
// refinement stops once two successive estimates differ by less than tol.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace zgap {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |I_k - I_{k-1}| at the final level
    int levels = 0;
    long evaluations = 0;
    bool converged = false;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

inline constexpr int kMaxQuadratureLevels = 12;

/// Integral of f over (0, inf). f is never evaluated at 0 or infinity; it
/// must return finite values for every u in (1e-100, 1e100).
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double tol,
                                     int max_levels = kMaxQuadratureLevels);

}  // namespace zgap
