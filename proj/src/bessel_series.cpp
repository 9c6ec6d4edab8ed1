#include "zgap/bessel_series.hpp"

#include "zgap/combinatorics.hpp"
#include "zgap/partition.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zgap {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

int hankel_sign(long l) {
    return ((l * (l - 1) / 2) % 2 == 0) ? 1 : -1;
}

}  // namespace

HalfPowerSeries ibessel_sqrtx(long order, long terms) {
    require(order >= 0, "ibessel_sqrtx: order must be nonnegative");
    require(terms >= 1, "ibessel_sqrtx: terms must be positive");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(terms));
    for (long m = 0; m < terms; ++m) {
        coeffs.emplace_back(Integer(1), factorial(m) * factorial(m + order));
    }
    return HalfPowerSeries(order, std::move(coeffs));
}

SeriesMatrix hankel_bessel_matrix(long l, long terms) {
    require(l >= 1, "hankel_bessel_matrix: l must be positive");
    std::vector<std::vector<HalfPowerSeries>> entries(static_cast<std::size_t>(l));
    for (long j = 0; j < l; ++j) {
        for (long k = 0; k < l; ++k) {
            entries[static_cast<std::size_t>(j)].push_back(ibessel_sqrtx(j + k + 1, terms));
        }
    }
    return SeriesMatrix(std::move(entries));
}

HalfPowerSeries hankel_bessel_taylor(long l, long terms) {
    HalfPowerSeries det = hankel_bessel_matrix(l, terms).determinant();
    // Every Leibniz term carries x^{l^2/2}, and the leading coefficient is
    // nonzero, so this never shifts the offset.
    return det.normalize();
}

HalfPowerSeries toeplitz_bessel_taylor(long l, long terms) {
    require(l >= 1, "toeplitz_bessel_taylor: l must be positive");
    require(terms >= 1, "toeplitz_bessel_taylor: terms must be positive");
    std::vector<std::vector<HalfPowerSeries>> entries(static_cast<std::size_t>(l));
    for (long j = 0; j < l; ++j) {
        for (long k = 0; k < l; ++k) {
            entries[static_cast<std::size_t>(j)].push_back(ibessel_sqrtx(std::labs(j - k), terms));
        }
    }
    return SeriesMatrix(std::move(entries)).determinant();
}

HalfPowerSeries group_integral_series(long l, long det_power, long terms) {
    require(l >= 1, "group_integral_series: l must be positive");
    require(det_power >= 0, "group_integral_series: det_power must be nonnegative");
    require(terms >= 1, "group_integral_series: terms must be positive");
    const long shift = l * det_power;
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(terms));
    for (long k = 0; k < terms; ++k) {
        Integer sum = 0;
        for (const Partition& lambda : partitions_of(k, k, l)) {
            sum += hook_length_count(lambda) * hook_length_count(lambda.widened(l, det_power));
        }
        coeffs.emplace_back(sum, factorial(k) * factorial(k + shift));
    }
    return HalfPowerSeries(shift, std::move(coeffs));
}

UnitaryIdentityReport compare_unitary_identity(long l, const HalfPowerSeries& group_side,
                                               const HalfPowerSeries& hankel_determinant) {
    UnitaryIdentityReport report;
    report.l = l;
    report.sign = hankel_sign(l);
    report.group_side = group_side;
    report.determinant_side = hankel_determinant * Rational(report.sign);

    const long lo = std::min(group_side.twice_offset(), hankel_determinant.twice_offset());
    const long hi = std::min(group_side.twice_offset() + 2 * static_cast<long>(group_side.truncation_order()),
                             hankel_determinant.twice_offset() +
                                 2 * static_cast<long>(hankel_determinant.truncation_order()));
    report.terms = std::max(0L, (hi - lo) / 2);
    for (long e = lo; e < hi; e += 2) {
        const auto g = report.group_side.coeff_at_twice_exponent(e);
        const auto d = report.determinant_side.coeff_at_twice_exponent(e);
        if (!g || !d) {
            break;
        }
        if (*g != *d) {
            report.first_mismatch = SeriesMismatch{static_cast<std::size_t>((e - lo) / 2), e, *g, *d};
            break;
        }
    }
    return report;
}

UnitaryIdentityReport verify_unitary_identity(long l, long terms) {
    if (l < 1 || l > 6) {
        throw std::invalid_argument("verify_unitary_identity: l must lie in 1..6, got " + std::to_string(l));
    }
    return compare_unitary_identity(l, group_integral_series(l, l, terms), hankel_bessel_taylor(l, terms));
}

}  // namespace zgap
