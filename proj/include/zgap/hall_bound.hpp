// hall_bound.hpp
//
// Certification of the conditional lower bounds on normalised gaps between
// zeros of Z^(n), n = 1, 2, using moment data with l = 4. The pipeline is
//
//   Table data -> B(h,4;n) -> A..D -> closed-form X -> (v1, v2, v3, lambda)
//
// followed by independent numerical checks of every step. The certified bound
// is sqrt(X).

#pragma once

#include "zgap/joint_moments.hpp"
#include "zgap/rational.hpp"
#include "zgap/wirtinger.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zgap {

/// (AB(C-D) + C(B^2 + CD - 2BD)) / (16 (B-C)(C-D)). Throws std::domain_error
/// when B == C or C == D.
Rational hall_closed_form_X(const Rational& A, const Rational& B, const Rational& C, const Rational& D);

/// Exact intermediate quantities of the parameter derivation.
struct DerivedParams {
    std::array<Rational, 4> tau;
    std::array<Rational, 4> sigma;
    Rational v1;
    Rational v2;
    Rational v3;
    Rational lambda;

    /// Floating-point view with l = 4.
    WirtingerParams params() const;
};

/// Matches coefficients of t^8 - 4 v3 t^6 + 6 v2 t^4 - 4 v1 t^2 + lambda
/// against (t^4 + s2 t^2 + s4)^2 - (s1 t^3 + s3 t)^2.
DerivedParams derive_params(const Rational& A, const Rational& B, const Rational& C, const Rational& D,
                            const Rational& X);

/// Coefficients (t^0, t^2, ..., t^8) of the left side minus the right side
/// of the octic identity; all zero when the derivation is consistent.
std::array<Rational, 5> octic_identity_defect(const DerivedParams& d);

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    std::string note;
};

struct BoundCertificate {
    long n = 0;
    double tolerance = 0.0;
    std::array<Rational, 4> inputs;  // A, B, C, D
    std::vector<Rational> capB;      // B(h,4;n), h = 0..4
    std::optional<Rational> X;
    std::optional<DerivedParams> derived;
    std::vector<CheckResult> checks;
    Rational threshold;              // 1.98 or 1.71
    std::string bound_decimal;       // sqrt(X) truncated, empty if X unavailable
    double bound = 0.0;
    std::vector<std::string> notes;

    bool valid() const;
    /// First failing check, if any.
    const CheckResult* first_failure() const;
};

inline constexpr double kDefaultTolerance = 1e-8;

struct CertifyOptions {
    double tol = kDefaultTolerance;
    /// Moment column to use in place of the tabulated one (mutation testing).
    std::optional<MomentColumn> column;
    bool check_local_optimality = true;
};

/// The threshold each bound is compared against: 1.98 (n = 1), 1.71 (n = 2).
Rational bound_threshold(long n);

/// Runs the full pipeline for n in {1, 2}. Never throws for bad data: any
/// failure is recorded as a failed check. Throws std::invalid_argument for
/// other n.
BoundCertificate certify_bound(long n, const CertifyOptions& options = {});

/// floor(sqrt(x) * 10^digits) / 10^digits as a decimal string; x >= 0.
std::string sqrt_truncated(const Rational& x, int digits);

}  // namespace zgap
