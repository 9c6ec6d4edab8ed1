// lis_count.hpp
//
// T_l(N): permutations of {1..N} whose longest increasing subsequence has
// length at most l, computed three independent ways.

#pragma once

#include "zgap/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace zgap {

inline constexpr long kBruteForceMaxN = 9;

/// Longest strictly increasing subsequence by patience sorting. Throws
/// std::invalid_argument unless perm is a permutation of 1..N.
long lis_length(std::span<const long> perm);

/// Full enumeration of the N! permutations. Throws for N < 0 or N > 9.
Integer t_count_bruteforce(long l, long n);

/// Sum of (f^lambda)^2 over partitions of N with first part <= l.
Integer t_count_rsk(long l, long n);

/// (N!)^2 times the z^{2N} coefficient of the Toeplitz Bessel determinant.
/// Throws std::logic_error if that product is not an integer.
Integer t_count_series(long l, long n);

struct LisRow {
    long n = 0;
    Integer t;                       // RSK count
    std::optional<Integer> bruteforce;  // only for n <= 9
    Integer series;
    bool agree() const { return t == series && (!bruteforce || *bruteforce == t); }
};

struct LisTable {
    long l = 0;
    std::vector<LisRow> rows;
    bool all_agree() const;
};

/// Rows N = 0..max_n with every available method filled in.
LisTable lis_table(long l, long max_n);

}  // namespace zgap
