#include "zgap/joint_moments.hpp"

#include "zgap/combinatorics.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace zgap {

Rational ks_coefficient(long l) {
    if (l < 1) {
        throw std::invalid_argument("ks_coefficient: l must be positive");
    }
    Rational out = 1;
    for (long j = 0; j < l; ++j) {
        out *= Rational(factorial(j), factorial(j + l));
    }
    return out;
}

long m_exponent(long h, long l, long n1, long n2) {
    if (h < 0 || h > l) {
        throw std::invalid_argument("m_exponent: need 0 <= h <= l");
    }
    return l * l + 2 * h * n1 + 2 * (l - h) * n2;
}

// --- arithmetic factor ------------------------------------------------------

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    std::vector<long> primes;
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        primes.push_back(i);
        for (long j = i * i; j <= n; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

}  // namespace

ArithmeticFactorEstimate arithmetic_factor(long l, long prime_cutoff, long inner_terms) {
    if (l < 1 || prime_cutoff < 2 || inner_terms < 1) {
        throw std::invalid_argument("arithmetic_factor: need l >= 1, cutoff >= 2, inner_terms >= 1");
    }
    ArithmeticFactorEstimate est;
    est.l = l;
    est.prime_cutoff = prime_cutoff;
    est.inner_terms = inner_terms;

    const double l2 = static_cast<double>(l * l);
    double log_product = 0.0;
    double inner_rel = 0.0;
    for (long p : primes_up_to(prime_cutoff)) {
        const double x = 1.0 / static_cast<double>(p);
        // term_m = C(m+l-1, m)^2 x^m; ratio term_{m+1}/term_m = ((m+l)/(m+1))^2 x.
        double term = 1.0;
        double inner = 0.0;
        for (long m = 0; m < inner_terms; ++m) {
            inner += term;
            const double r = static_cast<double>(m + l) / static_cast<double>(m + 1);
            term *= r * r * x;
        }
        // `term` is now the first omitted term; the ratios decrease with m.
        const double r = static_cast<double>(inner_terms + l) / static_cast<double>(inner_terms + 1);
        const double ratio = r * r * x;
        const double tail = ratio < 1.0 ? term / (1.0 - ratio) : std::numeric_limits<double>::infinity();
        inner_rel += tail / inner;
        log_product += l2 * std::log1p(-x) + std::log(inner);
        ++est.primes_used;
    }
    est.value = std::exp(log_product);
    est.inner_tail = inner_rel;

    // For large p the local factor is 1 + C_l / p^2 + O(p^-3) with
    // C_l = C(l-1,2)^2 - (l-1)^4/2 - (l-1)^2/2, and sum_{p > P} p^-2 < 1/P.
    const double lm1 = static_cast<double>(l - 1);
    const double c2 = std::pow(lm1 * (lm1 - 1.0) / 2.0, 2) - std::pow(lm1, 4) / 2.0 - lm1 * lm1 / 2.0;
    const double cutoff = static_cast<double>(prime_cutoff);
    est.product_tail = std::abs(c2) / cutoff + std::pow(static_cast<double>(l), 6) / (cutoff * cutoff);

    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(est.primes_used);
    est.error_bound = est.value * (std::expm1(est.product_tail) + inner_rel + rounding);
    return est;
}

// --- b_{h,l}(2,1) -------------------------------------------------------------

namespace {

/// Calls fn for every composition of `total` into `parts` nonnegative parts,
/// in lexicographic order.
void for_each_composition(long total, long parts, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> c(static_cast<std::size_t>(parts), 0);
    if (parts == 0) {
        if (total == 0) {
            fn(c);
        }
        return;
    }
    c.back() = total;
    while (true) {
        fn(c);
        // Advance: find the rightmost position before the last that can take
        // one more unit from the tail.
        long i = parts - 2;
        while (i >= 0) {
            long tail = 0;
            for (long j = i + 1; j < parts; ++j) {
                tail += c[static_cast<std::size_t>(j)];
            }
            if (tail > 0) {
                ++c[static_cast<std::size_t>(i)];
                for (long j = i + 1; j < parts; ++j) {
                    c[static_cast<std::size_t>(j)] = 0;
                }
                c.back() = tail - 1;
                break;
            }
            --i;
        }
        if (i < 0) {
            return;
        }
    }
}

}  // namespace

Rational b_partition_sum(long h, long l) {
    if (l < 1 || h < 0 || h > l) {
        throw std::invalid_argument("b_partition_sum: need l >= 1 and 0 <= h <= l");
    }
    const auto idx = [](long j) { return static_cast<std::size_t>(j); };

    Rational total = 0;
    for (long k = 0; k <= 2 * h; ++k) {
        const long m_total = 2 * l + 2 * h - 2 * k;
        Rational inner = 0;
        for_each_composition(k, l, [&](const std::vector<long>& hs) {
            const Integer hs_multi = multinomial(k, hs);
            for_each_composition(m_total, l + 1, [&](const std::vector<long>& ms) {
                // ms[0] is m_0; ms[j] is m_j for j = 1..l; hs[j-1] is h_j.
                Integer num = hs_multi * multinomial(m_total, ms);
                Integer den = 1;
                mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(ms[0]));
                for (long j = 1; j <= l; ++j) {
                    den *= factorial(2 * l + ms[idx(j)] + 2 * hs[idx(j - 1)] - j);
                }
                for (long j = 1; j <= l; ++j) {
                    for (long s = j + 1; s <= l; ++s) {
                        num *= ms[idx(s)] + 2 * hs[idx(s - 1)] - ms[idx(j)] - 2 * hs[idx(j - 1)] - s + j;
                    }
                }
                if (num == 0) {
                    return;
                }
                if (ms[0] % 2 == 1) {
                    num = -num;
                }
                inner += Rational(num, den);
            });
        });
        total += Rational(binomial(2 * h, k)) * inner;
    }
    const long sign_exp = l - h + l * (l - 1) / 2;
    return sign_exp % 2 == 0 ? total : -total;
}

std::string_view to_string(MomentSource s) {
    switch (s) {
        case MomentSource::computed_partition_sum:
            return "computed-partition-sum";
        case MomentSource::paper_table:
            return "paper-table";
    }
    return "unknown";
}

// --- tabulated values ---------------------------------------------------------

namespace {

using PP = PrimePower;

// b_{h,4}(n+1, n), transcribed factor by factor. Row index h, column n - 1.
const std::array<std::array<FactoredConstant, 2>, 5>& table1() {
    static const std::array<std::array<FactoredConstant, 2>, 5> table = {{
        {{FactoredConstant(1, {PP{31, 1}, PP{2, -20}, PP{3, -10}, PP{5, -4}, PP{7, -2}, PP{11, -1}, PP{13, -1}}),
          FactoredConstant(1, {PP{103, 1}, PP{413129, 1}, PP{2, -28}, PP{3, -12}, PP{5, -5}, PP{7, -3},
                               PP{11, -2}, PP{13, -2}, PP{17, -1}, PP{19, -1}, PP{23, -1}})}},
        {{FactoredConstant(1, {PP{71, 1}, PP{2, -22}, PP{3, -9}, PP{5, -4}, PP{7, -2}, PP{11, -2}, PP{13, -1},
                               PP{17, -1}}),
          FactoredConstant(1, {PP{58452853, 1}, PP{2, -30}, PP{3, -11}, PP{5, -7}, PP{7, -4}, PP{11, -3},
                               PP{13, -2}, PP{17, -1}, PP{19, -1}})}},
        {{FactoredConstant(1, {PP{43, 1}, PP{3467, 1}, PP{2, -24}, PP{3, -10}, PP{5, -5}, PP{7, -4}, PP{11, -2},
                               PP{13, -1}, PP{17, -1}, PP{19, -1}}),
          FactoredConstant(1, {PP{67, 1}, PP{85489981, 1}, PP{2, -32}, PP{3, -12}, PP{5, -7}, PP{7, -5},
                               PP{11, -3}, PP{13, -2}, PP{17, -1}, PP{19, -1}, PP{23, -1}})}},
        {{FactoredConstant(1, {PP{271, 1}, PP{11483, 1}, PP{2, -26}, PP{3, -13}, PP{5, -5}, PP{7, -3},
                               PP{11, -2}, PP{13, -2}, PP{17, -1}, PP{19, -1}}),
          FactoredConstant(1, {PP{71, 1}, PP{389, 1}, PP{139091, 1}, PP{2, -34}, PP{3, -8}, PP{5, -6},
                               PP{7, -5}, PP{11, -3}, PP{13, -2}, PP{17, -2}, PP{19, -1}, PP{23, -1},
                               PP{29, -1}})}},
        {{FactoredConstant(1, {PP{103, 1}, PP{413129, 1}, PP{2, -28}, PP{3, -12}, PP{5, -5}, PP{7, -3},
                               PP{11, -2}, PP{13, -2}, PP{17, -1}, PP{19, -1}, PP{23, -1}}),
          FactoredConstant(1, {PP{449, 1}, PP{1721279377, 1}, PP{2, -36}, PP{3, -10}, PP{5, -7}, PP{7, -4},
                               PP{11, -3}, PP{13, -3}, PP{17, -2}, PP{19, -1}, PP{23, -1}, PP{31, -1}})}},
    }};
    return table;
}

void check_key(long h, long n, const char* who) {
    if (h < 0 || h > 4 || (n != 1 && n != 2)) {
        throw std::out_of_range(std::string(who) + ": no tabulated value for h=" + std::to_string(h) +
                                ", n=" + std::to_string(n));
    }
}

}  // namespace

const FactoredConstant& table1_entry(long h, long n) {
    check_key(h, n, "table1_entry");
    return table1()[static_cast<std::size_t>(h)][static_cast<std::size_t>(n - 1)];
}

Rational table1_value(long h, long n) {
    return table1_entry(h, n).evaluate();
}

MomentColumn table1_column(long n) {
    MomentColumn col;
    for (long h = 0; h <= 4; ++h) {
        col[static_cast<std::size_t>(h)] = table1_value(h, n);
    }
    return col;
}

// --- ratios -------------------------------------------------------------------

Rational capB_from(std::span<const Rational> b, long h) {
    const long l = static_cast<long>(b.size()) - 1;
    if (l < 1 || h < 0 || h > l) {
        throw std::invalid_argument("capB: need 0 <= h <= l with b_0..b_l supplied");
    }
    const Rational& top = b[static_cast<std::size_t>(l)];
    if (top.is_zero()) {
        throw std::domain_error("capB: b_{l,l} is zero");
    }
    return Rational(4).pow(h - l) * b[static_cast<std::size_t>(h)] / top;
}

Rational capB(long h, long l, long n) {
    if (l != 4 || (n != 1 && n != 2)) {
        throw std::out_of_range("capB: moment data available only for l=4, n in {1,2}");
    }
    const MomentColumn col = table1_column(n);
    return capB_from(col, h);
}

Rational ratioA_from(const MomentColumn& b, long h) {
    if (h < 1 || h > 4) {
        throw std::invalid_argument("ratioA: h must lie in 1..4");
    }
    return Rational(2 * h - 1, 2 * h - 3).abs() * capB_from(b, h - 1) / capB_from(b, h);
}

Rational ratioA(long h, long n) {
    return ratioA_from(table1_column(n), h);
}

Rational printed_ratioA(long h, long n) {
    static const std::array<std::array<const char*, 4>, 2> printed = {{
        {"5797/213", "2974545/149081", "87212385/21783251", "501014773/638284305"},
        {"81913152475/4033246857", "84698183997/5727828727", "2823819562411/933497701947",
         "13933317551283/22412778767917"},
    }};
    if (h < 1 || h > 4 || (n != 1 && n != 2)) {
        throw std::out_of_range("printed_ratioA: no printed value for h=" + std::to_string(h) +
                                ", n=" + std::to_string(n));
    }
    return Rational::parse(printed[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(h - 1)]);
}

RatioSet ratio_set(const MomentColumn& b, long n) {
    RatioSet out;
    out.n = n;
    for (long h = 0; h <= 4; ++h) {
        out.capB.push_back(capB_from(b, h));
    }
    for (long h = 1; h <= 4; ++h) {
        out.A[static_cast<std::size_t>(h - 1)] = ratioA_from(b, h);
    }
    return out;
}

}  // namespace zgap
