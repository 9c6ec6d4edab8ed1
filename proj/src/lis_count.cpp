#include "zgap/lis_count.hpp"

#include "zgap/bessel_series.hpp"
#include "zgap/combinatorics.hpp"
#include "zgap/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zgap {

long lis_length(std::span<const long> perm) {
    const long n = static_cast<long>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (long v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("lis_length: input is not a permutation of 1..N");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    // Top card of each pile; piles stay sorted.
    std::vector<long> tops;
    for (long v : perm) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            *it = v;
        }
    }
    return static_cast<long>(tops.size());
}

Integer t_count_bruteforce(long l, long n) {
    if (n < 0 || n > kBruteForceMaxN) {
        throw std::invalid_argument("t_count_bruteforce: N must lie in 0..9, got " + std::to_string(n));
    }
    std::vector<long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    unsigned long count = 0;
    do {
        count += lis_length(perm) <= l ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Integer(count);
}

Integer t_count_rsk(long l, long n) {
    if (n < 0) {
        throw std::invalid_argument("t_count_rsk: negative N");
    }
    Integer total = 0;
    for (const Partition& lambda : partitions_of(n, l, n)) {
        const Integer f = hook_length_count(lambda);
        total += f * f;
    }
    return total;
}

Integer t_count_series(long l, long n) {
    if (l < 1 || n < 0) {
        throw std::invalid_argument("t_count_series: need l >= 1 and N >= 0");
    }
    const HalfPowerSeries series = toeplitz_bessel_taylor(l, n + 1);
    const auto coeff = series.coeff_at_twice_exponent(2 * n);
    if (!coeff) {
        throw std::logic_error("t_count_series: coefficient beyond truncation horizon");
    }
    const Integer nf = factorial(n);
    const Rational scaled = *coeff * Rational(Integer(nf * nf));
    if (!scaled.is_integer()) {
        throw std::logic_error("t_count_series: (N!)^2 * coefficient is not an integer: " + scaled.to_string());
    }
    return scaled.numerator();
}

bool LisTable::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const LisRow& r) { return r.agree(); });
}

LisTable lis_table(long l, long max_n) {
    if (l < 1 || max_n < 0) {
        throw std::invalid_argument("lis_table: need l >= 1 and max_n >= 0");
    }
    LisTable table;
    table.l = l;
    const HalfPowerSeries series = toeplitz_bessel_taylor(l, max_n + 1);
    for (long n = 0; n <= max_n; ++n) {
        LisRow row;
        row.n = n;
        row.t = t_count_rsk(l, n);
        if (n <= kBruteForceMaxN) {
            row.bruteforce = t_count_bruteforce(l, n);
        }
        const Integer nf = factorial(n);
        const Rational scaled = *series.coeff_at_twice_exponent(2 * n) * Rational(Integer(nf * nf));
        if (!scaled.is_integer()) {
            throw std::logic_error("lis_table: non-integral series count at N=" + std::to_string(n));
        }
        row.series = scaled.numerator();
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace zgap
