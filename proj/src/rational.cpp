#include "zgap/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace zgap {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed value '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0) {
        throw bad();
    }
    if (slash != std::string_view::npos && den.set_str(std::string(text.substr(slash + 1)), 10) != 0) {
        throw bad();
    }
    if (den == 0) {
        throw bad();
    }
    return Rational(num, den);
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(q_)));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long exponent) const {
    Rational base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den_mpz_t(), e);
    // Powers of a reduced fraction stay reduced.
    mpq_class out;
    out.get_num() = num;
    out.get_den() = den;
    return Rational(std::move(out));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = ::abs(q_.get_num()) * scale;
    mpz_class whole;
    mpz_tdiv_q(whole.get_mpz_t(), scaled.get_mpz_t(), q_.get_den_mpz_t());
    std::string s = whole.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace zgap
