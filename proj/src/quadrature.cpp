#include "zgap/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace zgap {

namespace {

// Nodes beyond |t| = 5 lie outside u in (e^-233, e^233) and carry weights far
// below double resolution for the integrands used here.
constexpr double kHalfWidth = 5.0;
constexpr double kBaseStep = 0.5;

double node_contribution(const std::function<double(double)>& f, double t) {
    const double arg = std::numbers::pi * std::sinh(t);
    const double u = std::exp(arg);
    const double weight = std::numbers::pi * std::cosh(t) * u;
    if (weight == 0.0 || !std::isfinite(u)) {
        return 0.0;
    }
    return weight * f(u);
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double tol, int max_levels) {
    QuadratureResult out;
    const long base_count = static_cast<long>(kHalfWidth / kBaseStep);

    double sum = 0.0;
    for (long j = -base_count; j <= base_count; ++j) {
        sum += node_contribution(f, static_cast<double>(j) * kBaseStep);
        ++out.evaluations;
    }
    double step = kBaseStep;
    double estimate = sum * step;

    for (int level = 1; level <= max_levels; ++level) {
        step *= 0.5;
        const long count = static_cast<long>(kHalfWidth / step);
        for (long j = -count + 1; j <= count; j += 2) {
            sum += node_contribution(f, static_cast<double>(j) * step);
            ++out.evaluations;
        }
        const double next = sum * step;
        out.error_estimate = std::abs(next - estimate);
        estimate = next;
        out.levels = level;
        if (!std::isfinite(estimate)) {
            break;
        }
        if (level >= 2 && out.error_estimate < tol) {
            out.converged = true;
            break;
        }
    }
    out.value = estimate;
    if (!out.converged) {
        throw QuadratureError("integrate_half_line: no convergence after " + std::to_string(out.levels) +
                                  " levels, error estimate " + std::to_string(out.error_estimate),
                              out);
    }
    return out;
}

}  // namespace zgap
