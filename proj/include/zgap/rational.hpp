// rational.hpp
//
// Exact rational numbers over arbitrary-precision integers. Every value is
// kept in lowest terms with a positive denominator, so equality is plain
// component comparison.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace zgap {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value)  // NOLINT(google-explicit-constructor)
        : q_(to_gmp(value)) {}
    explicit Rational(const Integer& value) : q_(value) {}
    /// Throws std::domain_error when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p"; throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    /// Throws std::domain_error for zero.
    Rational inverse() const;
    /// Integer power; negative exponents invert.
    Rational pow(long exponent) const;

    double to_double() const { return q_.get_d(); }
    /// Lowest-terms "p/q"; integers print without a denominator.
    std::string to_string() const;
    /// Decimal expansion truncated toward zero after `digits` places.
    std::string to_decimal(int digits) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    template <std::integral T>
    static mpz_class to_gmp(T value) {
        if constexpr (std::is_signed_v<T>) {
            return mpz_class(static_cast<long>(value));
        } else {
            return mpz_class(static_cast<unsigned long>(value));
        }
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace zgap
