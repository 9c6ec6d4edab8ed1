#include "zgap/factored_constant.hpp"

#include <stdexcept>

namespace zgap {

FactoredConstant::FactoredConstant(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
    if (sign_ != 1 && sign_ != -1) {
        throw std::invalid_argument("FactoredConstant: sign must be +1 or -1");
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].base < 2) {
            throw std::invalid_argument("FactoredConstant: base below 2");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (factors_[j].base == factors_[i].base) {
                throw std::invalid_argument("FactoredConstant: repeated base " +
                                            std::to_string(factors_[i].base));
            }
        }
    }
}

Rational FactoredConstant::evaluate() const {
    Rational out = sign_;
    for (const auto& f : factors_) {
        out *= Rational(f.base).pow(f.exponent);
    }
    return out;
}

std::string FactoredConstant::to_string() const {
    std::string out = sign_ < 0 ? "-1" : "1";
    for (const auto& f : factors_) {
        out += " * " + std::to_string(f.base);
        if (f.exponent != 1) {
            out += "^" + std::to_string(f.exponent);
        }
    }
    return out;
}

}  // namespace zgap
