// factored_constant.hpp
//
// Signed products of integer powers, used to hold tabulated constants in
// exactly the form they are printed.

#pragma once

#include "zgap/rational.hpp"

#include <string>
#include <vector>

namespace zgap {

struct PrimePower {
    long base;
    long exponent;
};

class FactoredConstant {
public:
    /// Throws std::invalid_argument if sign is not +-1, a base is < 2, or a
    /// base repeats.
    FactoredConstant(int sign, std::vector<PrimePower> factors);

    int sign() const { return sign_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    Rational evaluate() const;
    /// e.g. "31 * 2^-20 * 3^-10".
    std::string to_string() const;

private:
    int sign_;
    std::vector<PrimePower> factors_;
};

inline Rational evaluate_factored(const FactoredConstant& c) { return c.evaluate(); }

}  // namespace zgap
