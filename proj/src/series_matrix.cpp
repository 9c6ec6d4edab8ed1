#include "zgap/series_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace zgap {

SeriesMatrix::SeriesMatrix(std::vector<std::vector<HalfPowerSeries>> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("SeriesMatrix: empty matrix");
    }
    for (const auto& row : entries_) {
        if (row.size() != entries_.size()) {
            throw std::invalid_argument("SeriesMatrix: matrix is not square");
        }
    }
}

void SeriesMatrix::scale_row(std::size_t row, const Rational& factor) {
    for (auto& entry : entries_.at(row)) {
        entry *= factor;
    }
}

namespace {

bool odd_permutation(const std::vector<std::size_t>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            inversions += perm[i] > perm[j] ? 1 : 0;
        }
    }
    return inversions % 2 == 1;
}

}  // namespace

HalfPowerSeries SeriesMatrix::determinant() const {
    const std::size_t n = dimension();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::optional<HalfPowerSeries> total;
    do {
        HalfPowerSeries term = entries_[0][perm[0]];
        for (std::size_t row = 1; row < n; ++row) {
            term = term * entries_[row][perm[row]];
        }
        if (odd_permutation(perm)) {
            term *= Rational(-1);
        }
        total = total ? *total + term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *total;
}

}  // namespace zgap
