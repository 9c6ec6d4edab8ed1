// combinatorics.hpp
//
// Factorials, binomials and multinomials over arbitrary-precision integers.

#pragma once

#include "zgap/rational.hpp"

#include <span>

namespace zgap {

/// n! exactly. Throws std::invalid_argument for n < 0.
Integer factorial(long n);

/// C(n, k); zero when k < 0 or k > n. Throws for n < 0.
Integer binomial(long n, long k);

/// n! / prod(parts[i]!). Throws std::invalid_argument unless the parts are
/// nonnegative and sum to n.
Integer multinomial(long n, std::span<const long> parts);

}  // namespace zgap
