#include "zgap/partition.hpp"

#include "zgap/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zgap {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
    std::vector<long> out(static_cast<std::size_t>(first_part()), 0);
    for (long p : parts_) {
        for (long j = 0; j < p; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

Partition Partition::widened(long rows, long amount) const {
    std::vector<long> out = parts_;
    if (static_cast<long>(out.size()) < rows) {
        out.resize(static_cast<std::size_t>(rows), 0);
    }
    for (long i = 0; i < rows; ++i) {
        out[static_cast<std::size_t>(i)] += amount;
    }
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(long n, long max_part, long max_rows) {
    std::vector<Partition> out;
    if (n < 0 || max_rows < 0) {
        return out;
    }
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    max_part = std::min(max_part, n);
    if (max_part <= 0) {
        return out;
    }

    // Greedy fill of `remaining` with parts no larger than `cap`.
    const auto fill = [](std::vector<long>& parts, long remaining, long cap) {
        while (remaining > 0) {
            const long p = std::min(cap, remaining);
            parts.push_back(p);
            remaining -= p;
        }
    };

    std::vector<long> parts;
    fill(parts, n, max_part);
    while (true) {
        if (static_cast<long>(parts.size()) <= max_rows) {
            out.emplace_back(parts);
        }
        // Rightmost part larger than one.
        long idx = static_cast<long>(parts.size()) - 1;
        while (idx >= 0 && parts[static_cast<std::size_t>(idx)] == 1) {
            --idx;
        }
        if (idx < 0) {
            break;
        }
        long remaining = 0;
        for (std::size_t i = static_cast<std::size_t>(idx) + 1; i < parts.size(); ++i) {
            remaining += parts[i];
        }
        parts.resize(static_cast<std::size_t>(idx) + 1);
        const long cap = --parts.back();
        fill(parts, remaining + 1, cap);
    }
    return out;
}

Integer hook_length_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    const auto& rows = lambda.parts();
    const auto& cols = conj.parts();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (long j = 0; j < rows[i]; ++j) {
            const long arm = rows[i] - j - 1;
            const long leg = cols[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    Integer out = factorial(lambda.weight());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

}  // namespace zgap
