#include "zgap/hall_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zgap {

Rational hall_closed_form_X(const Rational& A, const Rational& B, const Rational& C, const Rational& D) {
    if (B == C || C == D) {
        throw std::domain_error("hall_closed_form_X: degenerate input (B == C or C == D)");
    }
    const Rational num = A * B * (C - D) + C * (B * B + C * D - 2 * B * D);
    return num / (16 * (B - C) * (C - D));
}

WirtingerParams DerivedParams::params() const {
    return WirtingerParams{4, {v1.to_double(), v2.to_double(), v3.to_double()}, lambda.to_double()};
}

DerivedParams derive_params(const Rational& A, const Rational& B, const Rational& C, const Rational& D,
                            const Rational& X) {
    (void)A;  // A enters only through X.
    if (B == C || D.is_zero() || C.is_zero()) {
        throw std::domain_error("derive_params: degenerate input");
    }
    DerivedParams d;
    const Rational bc = B - C;
    d.tau = {(4 * C - 4 * D) / (D * bc), (B - D) / (D * bc), (4 * C - 4 * D) / (C * D * bc),
             (C - D) / (C * D * bc)};
    const Rational X2 = X * X;
    d.sigma = {d.tau[0] * X, d.tau[1] * X, d.tau[2] * X2, d.tau[3] * X2};
    const auto& [s1, s2, s3, s4] = d.sigma;
    // (t^4 + s2 t^2 + s4)^2 - (s1 t^3 + s3 t)^2
    //   = t^8 + (2 s2 - s1^2) t^6 + (s2^2 + 2 s4 - 2 s1 s3) t^4 + (2 s2 s4 - s3^2) t^2 + s4^2
    d.v3 = (s1 * s1 - 2 * s2) / 4;
    d.v2 = (s2 * s2 + 2 * s4 - 2 * s1 * s3) / 6;
    d.v1 = (s3 * s3 - 2 * s2 * s4) / 4;
    d.lambda = s4 * s4;
    return d;
}

std::array<Rational, 5> octic_identity_defect(const DerivedParams& d) {
    const auto& [s1, s2, s3, s4] = d.sigma;
    const std::array<Rational, 5> lhs = {d.lambda, -4 * d.v1, 6 * d.v2, -4 * d.v3, Rational(1)};
    const std::array<Rational, 5> rhs = {s4 * s4, 2 * s2 * s4 - s3 * s3, s2 * s2 + 2 * s4 - 2 * s1 * s3,
                                         2 * s2 - s1 * s1, Rational(1)};
    std::array<Rational, 5> out;
    for (std::size_t i = 0; i < 5; ++i) {
        out[i] = lhs[i] - rhs[i];
    }
    return out;
}

bool BoundCertificate::valid() const {
    return !checks.empty() && first_failure() == nullptr;
}

const CheckResult* BoundCertificate::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return &c;
        }
    }
    return nullptr;
}

Rational bound_threshold(long n) {
    if (n == 1) {
        return Rational(198, 100);
    }
    if (n == 2) {
        return Rational(171, 100);
    }
    throw std::invalid_argument("bound_threshold: n must be 1 or 2");
}

std::string sqrt_truncated(const Rational& x, int digits) {
    if (x.sign() < 0) {
        throw std::domain_error("sqrt_truncated: negative argument");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * digits));
    Integer scaled = x.numerator() * scale;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer unit;
    mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return Rational(root, unit).to_decimal(digits);
}

namespace {

constexpr int kBoundDigits = 12;

class CheckLog {
public:
    explicit CheckLog(std::vector<CheckResult>& out) : out_(out) {}

    void add(std::string name, bool passed, double residual, std::string note = {}) {
        out_.push_back(CheckResult{std::move(name), passed, residual, std::move(note)});
    }

    /// Runs fn, recording a failed check instead of propagating exceptions.
    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            add(name, false, std::nan(""), e.what());
        }
    }

private:
    std::vector<CheckResult>& out_;
};

}  // namespace

BoundCertificate certify_bound(long n, const CertifyOptions& options) {
    BoundCertificate cert;
    cert.n = n;
    cert.tolerance = options.tol;
    cert.threshold = bound_threshold(n);
    CheckLog log(cert.checks);
    const double tol = options.tol;
    const double accept = 10.0 * tol;

    const MomentColumn column = options.column ? *options.column : table1_column(n);
    if (options.column) {
        cert.notes.emplace_back("moment column supplied by caller");
    }

    // Provenance of the moment data.
    if (n == 1) {
        long mismatches = 0;
        for (long h = 0; h <= 4; ++h) {
            mismatches += b_partition_sum(h, 4) == column[static_cast<std::size_t>(h)] ? 0 : 1;
        }
        log.add("moments_match_partition_sum", mismatches == 0, static_cast<double>(mismatches),
                "b_{h,4}(2,1) recomputed from the composition sum");
    } else {
        cert.notes.emplace_back("b_{h,4}(3,2) enter as tabulated constants only");
    }

    try {
        const RatioSet ratios = ratio_set(column, n);
        cert.capB = ratios.capB;
        cert.inputs = ratios.A;
    } catch (const std::exception& e) {
        log.add("ratios", false, std::nan(""), e.what());
        return cert;
    }
    {
        long mismatches = 0;
        for (long h = 1; h <= 4; ++h) {
            mismatches += cert.inputs[static_cast<std::size_t>(h - 1)] == printed_ratioA(h, n) ? 0 : 1;
        }
        log.add("a_ratios_match_printed", mismatches == 0, static_cast<double>(mismatches));
    }

    const auto& [A, B, C, D] = cert.inputs;
    try {
        cert.X = hall_closed_form_X(A, B, C, D);
        cert.derived = derive_params(A, B, C, D, *cert.X);
    } catch (const std::exception& e) {
        log.add("closed_form", false, std::nan(""), e.what());
        return cert;
    }
    const Rational& X = *cert.X;
    const DerivedParams& derived = *cert.derived;
    log.add("x_positive", X.sign() > 0, X.to_double());
    if (X.sign() <= 0) {
        return cert;
    }
    cert.bound_decimal = sqrt_truncated(X, kBoundDigits);
    cert.bound = std::sqrt(X.to_double());

    {
        long nonzero = 0;
        for (const auto& c : octic_identity_defect(derived)) {
            nonzero += c.is_zero() ? 0 : 1;
        }
        log.add("octic_identity_exact", nonzero == 0, static_cast<double>(nonzero));
    }

    const WirtingerParams params = derived.params();
    {
        const double min_v = std::min({params.v[0], params.v[1], params.v[2]});
        log.add("v_positive", min_v > 0.0, min_v);
    }
    {
        const MonotoneCheck mono = g_monotone_check(params);
        log.add("g_monotone", mono.monotone, mono.witness.value_or(0.0),
                mono.by_sign_condition ? "all v_h >= 0" : "sampled G' on [1e-6, 1e6]");
    }
    log.guarded("lambda_residual", [&] {
        const QuadratureResult r = lambda_residual(params, tol);
        log.add("lambda_residual", std::abs(r.value) < accept, r.value);
    });
    log.guarded("lambda_consistency", [&] {
        const double solved = lambda_solve(params.v, 4, tol);
        const double diff = solved - params.lambda;
        log.add("lambda_consistency", std::abs(diff) < accept, diff);
    });
    log.guarded("pi_check", [&] {
        const QuadratureResult r = rational_integral_check(params, tol);
        log.add("pi_check", std::abs(r.value) < accept, r.value);
    });
    cert.notes.emplace_back("rational-form denominator u^8 + 4 v3 u^6 + 6 v2 u^4 + 4 v1 u^2 + lambda "
                            "is the octic in t evaluated at t = i u");

    std::vector<double> capB_real;
    for (const auto& b : cert.capB) {
        capB_real.push_back(b.to_double());
    }
    const double x_closed = X.to_double();
    log.guarded("x_root_agreement", [&] {
        const double root = x_root(params.v, params.lambda, capB_real, 4, tol);
        log.add("x_root_agreement", std::abs(root - x_closed) < accept, root - x_closed);
    });

    if (options.check_local_optimality) {
        log.guarded("local_optimality", [&] {
            // Perturb each v_h by +-1%, re-solve lambda and X; none may beat X.
            double best_gain = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < params.v.size(); ++i) {
                for (double rel : {-0.01, 0.01}) {
                    std::vector<double> v = params.v;
                    v[i] *= 1.0 + rel;
                    const double lam = lambda_solve(v, 4, tol);
                    const double x = x_root(v, lam, capB_real, 4, tol);
                    best_gain = std::max(best_gain, x - x_closed);
                }
            }
            log.add("local_optimality", best_gain <= accept, best_gain);
        });
    }

    const Rational threshold_sq = cert.threshold * cert.threshold;
    log.add("bound_exceeds_threshold", X > threshold_sq, cert.bound - cert.threshold.to_double(),
            "X > " + threshold_sq.to_string() + " compared exactly");
    return cert;
}

}  // namespace zgap
