#include "zgap/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace zgap {

Integer factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer multinomial(long n, std::span<const long> parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) {
            throw std::invalid_argument("multinomial: negative part");
        }
        total += p;
    }
    if (total != n) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(n));
    }
    // Product of successive binomials keeps every intermediate integral.
    Integer out = 1;
    long placed = 0;
    for (long p : parts) {
        placed += p;
        out *= binomial(placed, p);
    }
    return out;
}

}  // namespace zgap
