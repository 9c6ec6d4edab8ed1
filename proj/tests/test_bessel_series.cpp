#include "zgap/bessel_series.hpp"
#include "zgap/combinatorics.hpp"
#include "zgap/joint_moments.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zgap;

namespace {

Rational q(long p, long r) {
    return Rational(Integer(p), Integer(r));
}

// (1/2pi) int_0^{2pi} cos(d t) exp(2 z cos t) dt by the trapezoid rule, which
// is spectrally accurate for periodic integrands.
double circle_average(long d, double z) {
    constexpr int kNodes = 256;
    double acc = 0.0;
    for (int k = 0; k < kNodes; ++k) {
        const double t = 2.0 * std::numbers::pi * k / kNodes;
        acc += std::cos(static_cast<double>(d) * t) * std::exp(2.0 * z * std::cos(t));
    }
    return acc / kNodes;
}

}  // namespace

TEST_CASE("half-power series arithmetic") {
    const HalfPowerSeries a(1, {Rational(1), Rational(2), Rational(3)});
    const HalfPowerSeries b(3, {Rational(1), Rational(-1)});
    SUBCASE("product keeps the shorter horizon") {
        const HalfPowerSeries p = a * b;
        CHECK(p.twice_offset() == 4);
        CHECK(p.truncation_order() == 2);
        CHECK(p.coeff(0) == Rational(1));
        CHECK(p.coeff(1) == Rational(1));
    }
    SUBCASE("sum spans from the lower offset to the nearer horizon") {
        // a known through x^{5/2}, b through x^{5/2}.
        const HalfPowerSeries s = a + b;
        CHECK(s.twice_offset() == 1);
        CHECK(s.truncation_order() == 3);
        CHECK(s.coeff(1) == Rational(3));
        CHECK(s.coeff(2) == Rational(2));
    }
    SUBCASE("parity mismatch is rejected") {
        const HalfPowerSeries even(0, {Rational(1)});
        CHECK_THROWS(a + even);
    }
    SUBCASE("coefficient lookup by exponent") {
        CHECK(*a.coeff_at_twice_exponent(3) == Rational(2));
        CHECK(*a.coeff_at_twice_exponent(-1) == Rational(0));
        CHECK(*a.coeff_at_twice_exponent(2) == Rational(0));
        CHECK_FALSE(a.coeff_at_twice_exponent(7).has_value());
    }
    SUBCASE("normalize raises the offset") {
        HalfPowerSeries z(0, {Rational(0), Rational(0), Rational(5)});
        z.normalize();
        CHECK(z.twice_offset() == 4);
        CHECK(z.coeff(0) == Rational(5));
    }
}

TEST_CASE("Bessel series agree with the library function") {
    for (long nu = 0; nu <= 5; ++nu) {
        const HalfPowerSeries s = ibessel_sqrtx(nu, 25);
        CHECK(s.twice_offset() == nu);
        for (double x : {0.01, 0.25, 1.0, 4.0}) {
            const double expected = std::cyl_bessel_i(static_cast<double>(nu), 2.0 * std::sqrt(x));
            CHECK(s.evaluate(x) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("Hankel determinant for l = 2 by hand") {
    // I1 I3 - I2^2 = x^2 (1/6 - 1/4) + ...
    const HalfPowerSeries h = hankel_bessel_taylor(2, 4);
    CHECK(h.twice_offset() == 4);
    CHECK(h.coeff(0) == q(-1, 12));
}

TEST_CASE("Hankel determinant grading and leading coefficient") {
    for (long l = 1; l <= 5; ++l) {
        const HalfPowerSeries h = hankel_bessel_taylor(l, 4);
        CHECK(h.twice_offset() == l * l);
        Rational lead(1);
        for (long j = 0; j < l; ++j) {
            lead *= Rational(factorial(j), factorial(j + l));
        }
        const long sign = (l * (l - 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(h.coeff(0) == Rational(sign) * lead);
        CHECK(ks_coefficient(l) == lead);
    }
}

TEST_CASE("determinant is multilinear in rows") {
    SeriesMatrix m = hankel_bessel_matrix(3, 6);
    const HalfPowerSeries before = m.determinant();
    m.scale_row(1, q(-7, 3));
    CHECK(m.determinant() == before * q(-7, 3));
    CHECK_THROWS_AS(SeriesMatrix({}), std::invalid_argument);
}

TEST_CASE("Toeplitz determinant coefficient counts permutations") {
    // Permutations of 3 with no increasing run of length 3: 5 of 6.
    const HalfPowerSeries t = toeplitz_bessel_taylor(2, 5);
    CHECK(*t.coeff_at_twice_exponent(6) == q(5, 36));
    CHECK(*t.coeff_at_twice_exponent(0) == Rational(1));
}

TEST_CASE("U(1) group integral against quadrature on the circle") {
    for (long d = 0; d <= 3; ++d) {
        const HalfPowerSeries g = group_integral_series(1, d, 20);
        for (double z : {0.5, 1.0}) {
            CHECK(g.evaluate(z * z) == doctest::Approx(circle_average(d, z)).epsilon(1e-12));
        }
    }
}

TEST_CASE("group integral with d = 0 equals the Toeplitz determinant") {
    for (long l = 1; l <= 4; ++l) {
        CHECK(group_integral_series(l, 0, 8) == toeplitz_bessel_taylor(l, 8));
    }
}

TEST_CASE("unitary identity holds for small l") {
    for (long l = 1; l <= 5; ++l) {
        const UnitaryIdentityReport r = verify_unitary_identity(l, 8);
        CHECK(r.holds());
        CHECK(r.sign == ((l * (l - 1) / 2) % 2 == 0 ? 1 : -1));
        CHECK(r.group_side.twice_offset() == l * l);
        CHECK(r.group_side.truncation_order() == 8);
    }
    CHECK_THROWS_AS(verify_unitary_identity(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(verify_unitary_identity(7, 8), std::invalid_argument);
}

TEST_CASE("a corrupted coefficient is reported at the right power of z") {
    const long l = 3;
    const HalfPowerSeries hankel = hankel_bessel_taylor(l, 8);
    HalfPowerSeries group = group_integral_series(l, l, 8);
    group.set_coeff(5, group.coeff(5) + q(1, 1000000));
    const UnitaryIdentityReport r = compare_unitary_identity(l, group, hankel);
    REQUIRE_FALSE(r.holds());
    CHECK(r.first_mismatch->index == 5);
    CHECK(r.first_mismatch->z_exponent == l * l + 10);
}
