// bessel_series.hpp
//
// Exact series for modified Bessel functions I_nu(2 sqrt(x)) and for the
// Hankel and Toeplitz determinants built from them. All series here are in the
// variable x; for the unitary-group averages x = z^2, so the coefficient of
// x^(o + k) is the coefficient of z^(2o + 2k).

#pragma once

#include "zgap/half_power_series.hpp"
#include "zgap/series_matrix.hpp"

#include <optional>

namespace zgap {

inline constexpr long kDefaultSeriesTerms = 12;

/// I_nu(2 sqrt(x)) = sum_m x^(nu/2 + m) / (m! (m + nu)!), first `terms` terms.
HalfPowerSeries ibessel_sqrtx(long order, long terms);

/// The l x l matrix [I_{j+k+1}(2 sqrt(x))].
SeriesMatrix hankel_bessel_matrix(long l, long terms);
/// det [I_{j+k+1}(2 sqrt(x))]_{j,k<l}; offset l^2/2.
HalfPowerSeries hankel_bessel_taylor(long l, long terms);

/// det [I_{j-k}(2 sqrt(x))]_{j,k<l}. With x = z^2 the coefficient of x^N is
/// T_l(N) / (N!)^2.
HalfPowerSeries toeplitz_bessel_taylor(long l, long terms);

/// < det(U)^d exp(z Tr(U + U^dagger)) > over Haar U(l), by character
/// expansion over partitions with at most l rows. Offset l*d/2 in x = z^2.
HalfPowerSeries group_integral_series(long l, long det_power, long terms);

struct SeriesMismatch {
    std::size_t index;     // coefficient index past the common offset
    long z_exponent;       // power of z carrying the mismatch
    Rational group_side;
    Rational determinant_side;
};

struct UnitaryIdentityReport {
    long l = 0;
    long terms = 0;
    int sign = 1;  // (-1)^{l(l-1)/2}
    HalfPowerSeries group_side;
    HalfPowerSeries determinant_side;  // already multiplied by `sign`
    std::optional<SeriesMismatch> first_mismatch;
    bool holds() const { return !first_mismatch.has_value(); }
};

/// Compares a group average with a Hankel determinant series coefficientwise,
/// applying the sign (-1)^{l(l-1)/2} to the determinant.
UnitaryIdentityReport compare_unitary_identity(long l, const HalfPowerSeries& group_side,
                                               const HalfPowerSeries& hankel_determinant);

/// < det(U)^l exp(z Tr(U + U^dagger)) > == (-1)^{l(l-1)/2} det [I_{j+k+1}(2z)]
/// through `terms` coefficients. Throws std::invalid_argument unless 1 <= l <= 6.
UnitaryIdentityReport verify_unitary_identity(long l, long terms);

}  // namespace zgap
