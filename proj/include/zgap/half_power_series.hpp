// half_power_series.hpp
//
// Truncated series x^o (c_0 + c_1 x + ... + c_{K-1} x^{K-1}) with o a multiple
// of 1/2. Internally this is a series in t = sqrt(x) supported on a single
// parity class, so the offset is stored doubled.

#pragma once

#include "zgap/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace zgap {

class HalfPowerSeries {
public:
    HalfPowerSeries() = default;
    HalfPowerSeries(long twice_offset, std::vector<Rational> coeffs);

    /// Offset o as an exact rational (a multiple of 1/2).
    Rational offset() const { return Rational(Integer(twice_offset_), Integer(2)); }
    long twice_offset() const { return twice_offset_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t truncation_order() const { return coeffs_.size(); }
    bool is_zero() const;

    /// Coefficient of x^(o + k); throws std::out_of_range past the horizon.
    const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }
    /// Coefficient of x^(twice_exponent / 2). Returns zero below the offset
    /// or off-parity, nullopt past the truncation horizon.
    std::optional<Rational> coeff_at_twice_exponent(long twice_exponent) const;

    /// Drops leading zero coefficients, raising the offset. A series that is
    /// zero through its horizon is left untouched.
    HalfPowerSeries& normalize();
    HalfPowerSeries truncated(std::size_t terms) const;
    void set_coeff(std::size_t k, Rational value) { coeffs_.at(k) = std::move(value); }

    /// Floating-point evaluation at x >= 0 of the retained terms.
    double evaluate(double x) const;

    HalfPowerSeries& operator*=(const Rational& scale);
    /// Operands must share offset parity; the result keeps every coefficient
    /// known exactly from both inputs.
    friend HalfPowerSeries operator+(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator-(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator*(HalfPowerSeries a, const Rational& s) { return a *= s; }
    HalfPowerSeries operator-() const;

    friend bool operator==(const HalfPowerSeries&, const HalfPowerSeries&) = default;

private:
    long twice_offset_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace zgap
