#include "zgap/half_power_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zgap {

HalfPowerSeries::HalfPowerSeries(long twice_offset, std::vector<Rational> coeffs)
    : twice_offset_(twice_offset), coeffs_(std::move(coeffs)) {}

bool HalfPowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::optional<Rational> HalfPowerSeries::coeff_at_twice_exponent(long twice_exponent) const {
    const long shift = twice_exponent - twice_offset_;
    if (shift < 0) {
        return Rational(0);
    }
    if (shift >= 2 * static_cast<long>(coeffs_.size())) {
        return std::nullopt;
    }
    if (shift % 2 != 0) {
        return Rational(0);
    }
    const auto k = static_cast<std::size_t>(shift / 2);
    return coeffs_[k];
}

HalfPowerSeries& HalfPowerSeries::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end() || first == coeffs_.begin()) {
        return *this;
    }
    twice_offset_ += 2 * static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    return *this;
}

HalfPowerSeries HalfPowerSeries::truncated(std::size_t terms) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(terms, coeffs_.size())));
    return HalfPowerSeries(twice_offset_, std::move(c));
}

double HalfPowerSeries::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc * std::pow(x, 0.5 * static_cast<double>(twice_offset_));
}

HalfPowerSeries& HalfPowerSeries::operator*=(const Rational& scale) {
    for (auto& c : coeffs_) {
        c *= scale;
    }
    return *this;
}

HalfPowerSeries HalfPowerSeries::operator-() const {
    HalfPowerSeries out = *this;
    out *= Rational(-1);
    return out;
}

namespace {

HalfPowerSeries combine(const HalfPowerSeries& a, const HalfPowerSeries& b, int sign) {
    if ((a.twice_offset() - b.twice_offset()) % 2 != 0) {
        throw std::invalid_argument("HalfPowerSeries: adding series of different parity");
    }
    const long lo = std::min(a.twice_offset(), b.twice_offset());
    const long end = std::min(a.twice_offset() + 2 * static_cast<long>(a.truncation_order()),
                              b.twice_offset() + 2 * static_cast<long>(b.truncation_order()));
    const long count = std::max(0L, (end - lo) / 2);
    std::vector<Rational> out(static_cast<std::size_t>(count));
    const auto accumulate = [&](const HalfPowerSeries& s, const Rational& factor) {
        const long shift = (s.twice_offset() - lo) / 2;
        for (std::size_t k = 0; k < s.truncation_order(); ++k) {
            const long idx = shift + static_cast<long>(k);
            if (idx >= count) {
                break;
            }
            out[static_cast<std::size_t>(idx)] += factor * s.coeff(k);
        }
    };
    accumulate(a, 1);
    accumulate(b, sign);
    return HalfPowerSeries(lo, std::move(out));
}

}  // namespace

HalfPowerSeries operator+(const HalfPowerSeries& a, const HalfPowerSeries& b) {
    return combine(a, b, 1);
}

HalfPowerSeries operator-(const HalfPowerSeries& a, const HalfPowerSeries& b) {
    return combine(a, b, -1);
}

HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b) {
    const std::size_t n = std::min(a.truncation_order(), b.truncation_order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i).is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return HalfPowerSeries(a.twice_offset() + b.twice_offset(), std::move(out));
}

}  // namespace zgap
