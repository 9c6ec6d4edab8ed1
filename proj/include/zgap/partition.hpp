// partition.hpp
//
// Integer partitions and the hook-length count of standard Young tableaux.

#pragma once

#include "zgap/rational.hpp"

#include <vector>

namespace zgap {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing. Trailing zeros are stripped first.
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long weight() const;
    long rows() const { return static_cast<long>(parts_.size()); }
    long first_part() const { return parts_.empty() ? 0 : parts_.front(); }
    Partition conjugate() const;
    /// Adds `amount` to each of the first `rows` rows (padding with zeros).
    Partition widened(long rows, long amount) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<long> parts_;
};

/// All partitions of n with every part <= max_part and at most max_rows rows,
/// in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(long n, long max_part, long max_rows);

/// Number of standard Young tableaux of shape lambda: N! / prod(hooks).
Integer hook_length_count(const Partition& lambda);

}  // namespace zgap
