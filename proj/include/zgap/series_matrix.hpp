// series_matrix.hpp

#pragma once

#include "zgap/half_power_series.hpp"

#include <cstddef>
#include <vector>

namespace zgap {

/// Square grid of truncated series with a common horizon.
class SeriesMatrix {
public:
    /// Throws std::invalid_argument unless entries is dim x dim with dim >= 1.
    explicit SeriesMatrix(std::vector<std::vector<HalfPowerSeries>> entries);

    std::size_t dimension() const { return entries_.size(); }
    const HalfPowerSeries& at(std::size_t row, std::size_t col) const { return entries_.at(row).at(col); }

    void scale_row(std::size_t row, const Rational& factor);

    /// Leibniz expansion over all permutations in exact arithmetic. Intended
    /// for dimensions up to about 7.
    HalfPowerSeries determinant() const;

private:
    std::vector<std::vector<HalfPowerSeries>> entries_;
};

}  // namespace zgap
