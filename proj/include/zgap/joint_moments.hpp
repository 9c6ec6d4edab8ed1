// joint_moments.hpp
//
// Leading coefficients of joint moments of derivatives of the characteristic
// polynomial analogue of Hardy's Z-function, and the ratios that feed the
// zero-gap optimisation.

#pragma once

#include "zgap/factored_constant.hpp"
#include "zgap/rational.hpp"

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace zgap {

/// prod_{j<l} j! / (j + l)!, the leading coefficient of the 2l-th moment of
/// |Lambda_N(1)| over U(N).
Rational ks_coefficient(long l);

/// Power of N in the joint moment: l^2 + 2 h n1 + 2 (l - h) n2.
long m_exponent(long h, long l, long n1, long n2);

struct ArithmeticFactorEstimate {
    long l = 0;
    long prime_cutoff = 0;
    long inner_terms = 0;
    long primes_used = 0;
    double value = 0.0;          // partial Euler product over p <= cutoff
    double error_bound = 0.0;    // absolute; covers both truncations and rounding
    double inner_tail = 0.0;     // relative error from truncating the inner sums
    double product_tail = 0.0;   // relative estimate for the omitted primes
};

inline constexpr long kDefaultPrimeCutoff = 100000;
inline constexpr long kDefaultInnerTerms = 64;

/// prod_{p <= cutoff} (1 - 1/p)^{l^2} sum_{m < inner_terms} C(m+l-1, m)^2 p^{-m}.
ArithmeticFactorEstimate arithmetic_factor(long l, long prime_cutoff = kDefaultPrimeCutoff,
                                           long inner_terms = kDefaultInnerTerms);

/// b_{h,l}(2,1) from its double sum over compositions. Throws
/// std::invalid_argument unless 0 <= h <= l and l >= 1.
Rational b_partition_sum(long h, long l);

enum class MomentSource { computed_partition_sum, paper_table };
std::string_view to_string(MomentSource s);

struct MomentRecord {
    long h = 0;
    long l = 0;
    long n1 = 0;
    long n2 = 0;
    Rational value;
    MomentSource source = MomentSource::paper_table;
};

/// b_{h,4}(n+1, n) for h = 0..4, indexed by h.
using MomentColumn = std::array<Rational, 5>;

/// Tabulated b_{h,4}(n+1,n) in printed factored form; n in {1, 2}.
const FactoredConstant& table1_entry(long h, long n);
/// Throws std::out_of_range outside h in 0..4, n in {1, 2}.
Rational table1_value(long h, long n);
MomentColumn table1_column(long n);

/// B(h, l; n) = 4^{h-l} b_h / b_l for a column of values b_0..b_l.
Rational capB_from(std::span<const Rational> b, long h);
/// B(h, l; n) from the tabulated data; only l = 4, n in {1, 2} are available.
Rational capB(long h, long l, long n);

/// A(h, 4; n) = |(2h-1)/(2h-3)| B(h-1) / B(h) for h = 1..4.
Rational ratioA_from(const MomentColumn& b, long h);
Rational ratioA(long h, long n);
/// The A(h, 4; n) rationals as printed alongside the bounds.
Rational printed_ratioA(long h, long n);

struct RatioSet {
    long n = 0;
    std::vector<Rational> capB;    // h = 0..4
    std::array<Rational, 4> A;     // h = 1..4
};

RatioSet ratio_set(const MomentColumn& b, long n);

}  // namespace zgap
