#include "zgap/wirtinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zgap {

namespace {

double choose(long n, long k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double out = 1.0;
    for (long i = 1; i <= k; ++i) {
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return out;
}

// Below this u the integrands switch to their u -> 0 limits.
constexpr double kTinyU = 1e-100;

}  // namespace

double WirtingerParams::v_at(long h) const {
    if (h == l) {
        return 1.0;
    }
    return v.at(static_cast<std::size_t>(h - 1));
}

void validate(const WirtingerParams& params) {
    if (params.l < 1 || static_cast<long>(params.v.size()) != params.l - 1) {
        throw std::invalid_argument("WirtingerParams: need l >= 1 and exactly l - 1 free coefficients");
    }
}

double g_eval(const WirtingerParams& params, double u) {
    validate(params);
    const long l = params.l;
    const double u2 = u * u;
    double acc = 0.0;
    for (long h = l; h >= 1; --h) {
        acc = acc * u2 + choose(l, h) * params.v_at(h);
    }
    return static_cast<double>(2 * l - 1) * acc * u2;
}

double g_derivative(const WirtingerParams& params, double u) {
    validate(params);
    const long l = params.l;
    const double u2 = u * u;
    // G'(u) = (2l-1) sum 2h C(l,h) v_h u^{2h-1}
    double acc = 0.0;
    for (long h = l; h >= 1; --h) {
        acc = acc * u2 + 2.0 * static_cast<double>(h) * choose(l, h) * params.v_at(h);
    }
    return static_cast<double>(2 * l - 1) * acc * u;
}

MonotoneCheck g_monotone_check(const WirtingerParams& params) {
    validate(params);
    MonotoneCheck out;
    if (std::all_of(params.v.begin(), params.v.end(), [](double x) { return x >= 0.0; })) {
        out.monotone = true;
        out.by_sign_condition = true;
        return out;
    }
    constexpr int kSamples = 4001;
    for (int i = 0; i < kSamples; ++i) {
        const double u = std::pow(10.0, -6.0 + 12.0 * i / (kSamples - 1));
        if (!(g_derivative(params, u) > 0.0)) {
            out.witness = u;
            return out;
        }
    }
    out.monotone = true;
    return out;
}

QuadratureResult lambda_residual(const WirtingerParams& params, double tol) {
    validate(params);
    if (!(params.lambda > 0.0)) {
        throw std::invalid_argument("lambda_residual: lambda must be positive");
    }
    const long l = params.l;
    const double lambda = params.lambda;
    std::vector<double> a(static_cast<std::size_t>(l + 1), 0.0);  // a_h = C(l,h) v_h / lambda
    for (long h = 1; h <= l; ++h) {
        a[static_cast<std::size_t>(h)] = choose(l, h) * params.v_at(h) / lambda;
    }
    const auto integrand = [&](double u) {
        if (u < kTinyU) {
            return a[1];
        }
        if (u <= 1.0) {
            const double u2 = u * u;
            double y = 0.0;
            for (long h = l; h >= 1; --h) {
                y = y * u2 + a[static_cast<std::size_t>(h)];
            }
            y *= u2;
            if (!(y > -1.0)) {
                throw std::domain_error("lambda_residual: 1 + G/((2l-1)lambda) is not positive");
            }
            return std::log1p(y) / u2;
        }
        // log(1 + y) = 2l log u + log(sum_h a_h w^{l-h} + w^l) with w = u^-2.
        const double w = 1.0 / (u * u);
        double s = 0.0;
        for (long h = 1; h <= l; ++h) {
            s = s * w + a[static_cast<std::size_t>(h)];
        }
        const double wl = std::pow(w, static_cast<double>(l));
        const double inner = s + wl;
        if (!(inner > 0.0)) {
            throw std::domain_error("lambda_residual: 1 + G/((2l-1)lambda) is not positive");
        }
        return (2.0 * static_cast<double>(l) * std::log(u) + std::log(inner)) * w;
    };
    QuadratureResult r = integrate_half_line(integrand, tol);
    r.value -= static_cast<double>(l) * std::numbers::pi;
    return r;
}

double lambda_solve(const std::vector<double>& v, long l, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("lambda_solve: tol must be positive");
    }
    WirtingerParams p{l, v, 1.0};
    validate(p);
    const double quad_tol = 0.1 * tol;
    const auto residual = [&](double lambda) {
        p.lambda = lambda;
        return lambda_residual(p, quad_tol).value;
    };

    double lo = 1e-6;
    double hi = 1e6;
    for (int i = 0; i < 4 && residual(lo) <= 0.0; ++i) {
        lo *= 1e-3;
    }
    for (int i = 0; i < 4 && residual(hi) >= 0.0; ++i) {
        hi *= 1e3;
    }
    if (residual(lo) <= 0.0 || residual(hi) >= 0.0) {
        throw std::runtime_error("lambda_solve: could not bracket the root in [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
    for (int iter = 0; iter < 400; ++iter) {
        if (hi - lo <= tol * 1e-2 * std::max(1.0, lo)) {
            break;
        }
        // Geometric midpoint while the bracket spans decades.
        const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if (residual(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

QuadratureResult rational_integral_check(const WirtingerParams& params, double tol) {
    validate(params);
    const long l = params.l;
    const double lambda = params.lambda;
    std::vector<double> num(static_cast<std::size_t>(l + 1), 0.0);  // coefficient of u^{2h-2}
    std::vector<double> den(static_cast<std::size_t>(l + 1), 0.0);  // coefficient of u^{2h}
    for (long h = 1; h <= l; ++h) {
        num[static_cast<std::size_t>(h)] = choose(l - 1, h - 1) * params.v_at(h);
        den[static_cast<std::size_t>(h)] = choose(l, h) * params.v_at(h);
    }
    const auto integrand = [&](double u) {
        if (u <= 1.0) {
            const double u2 = u * u;
            double n = 0.0;
            double d = 0.0;
            for (long h = l; h >= 1; --h) {
                n = n * u2 + num[static_cast<std::size_t>(h)];
                d = d * u2 + den[static_cast<std::size_t>(h)];
            }
            d = d * u2 + lambda;
            return n / d;
        }
        // Divide through by u^{2l}: n/d = w (sum num_h w^{l-h}) / (sum den_h w^{l-h} + lambda w^l).
        const double w = 1.0 / (u * u);
        double n = 0.0;
        double d = 0.0;
        for (long h = 1; h <= l; ++h) {
            n = n * w + num[static_cast<std::size_t>(h)];
            d = d * w + den[static_cast<std::size_t>(h)];
        }
        d += lambda * std::pow(w, static_cast<double>(l));
        return w * n / d;
    };
    QuadratureResult r = integrate_half_line(integrand, 0.5 * tol);
    r.value = 2.0 * r.value - std::numbers::pi;
    r.error_estimate *= 2.0;
    return r;
}

double x_root(const std::vector<double>& v, double lambda, const std::vector<double>& capB, long l, double tol) {
    WirtingerParams p{l, v, lambda};
    validate(p);
    if (static_cast<long>(capB.size()) != l + 1) {
        throw std::invalid_argument("x_root: capB must hold B_0..B_l");
    }
    const double two_l_m1 = static_cast<double>(2 * l - 1);
    const auto f = [&](double x) {
        double acc = 0.0;
        for (long h = l; h >= 1; --h) {
            const double c = two_l_m1 / static_cast<double>(2 * h - 1) * choose(l, h) *
                             capB[static_cast<std::size_t>(h)] * p.v_at(h);
            acc = acc * x + c;
        }
        return acc * x - two_l_m1 * lambda * capB[0];
    };
    double lo = 0.0;
    double hi = 1e3;
    if (!(f(lo) < 0.0) || !(f(hi) > 0.0)) {
        throw std::runtime_error("x_root: no sign change on (0, 1000]");
    }
    for (int iter = 0; iter < 400 && hi - lo > tol * 1e-3; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace zgap
