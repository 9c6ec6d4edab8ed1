#include "zgap/combinatorics.hpp"
#include "zgap/factored_constant.hpp"
#include "zgap/partition.hpp"
#include "zgap/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

using namespace zgap;

TEST_CASE("rationals stay in lowest terms") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(Integer(8), Integer(4)).to_string() == "2");
    CHECK(Rational::parse("10/-4") == Rational(-5) / 2);
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(-50, 50);
    const auto draw = [&] {
        long den = 0;
        while (den == 0) {
            den = dist(rng);
        }
        return Rational(Integer(dist(rng)), Integer(den));
    };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        CHECK(a.denominator() > 0);
        CHECK(gcd(a.numerator(), a.denominator()) == 1);
    }
}

TEST_CASE("decimal truncation and powers") {
    CHECK(Rational(Integer(1), Integer(3)).to_decimal(5) == "0.33333");
    CHECK(Rational(Integer(-2), Integer(3)).to_decimal(3) == "-0.666");
    CHECK(Rational(Integer(2), Integer(3)).pow(-2) == Rational(Integer(9), Integer(4)));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("factorial against repeated multiplication") {
    Integer acc = 1;
    for (long n = 1; n <= 30; ++n) {
        acc *= n;
        CHECK(factorial(n) == acc);
    }
    CHECK(factorial(16) == Integer("20922789888000"));
    CHECK(factorial(0) == 1);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial against Pascal's triangle") {
    std::vector<std::vector<Integer>> pascal(41);
    for (long n = 0; n <= 40; ++n) {
        pascal[n].assign(static_cast<std::size_t>(n + 1), Integer(1));
        for (long k = 1; k < n; ++k) {
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        }
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal[n][k]);
        }
        CHECK(binomial(n, -1) == 0);
        CHECK(binomial(n, n + 1) == 0);
    }
}

TEST_CASE("multinomial against bitmask enumeration") {
    // Words of length 4 over {a, b} with two of each.
    long count = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        count += __builtin_popcount(mask) == 2 ? 1 : 0;
    }
    const std::vector<long> parts{2, 2};
    CHECK(multinomial(4, parts) == count);
    const std::vector<long> bad{2, 1};
    CHECK_THROWS_AS(multinomial(4, bad), std::invalid_argument);
    const std::vector<long> negative{5, -1};
    CHECK_THROWS_AS(multinomial(4, negative), std::invalid_argument);
}

TEST_CASE("multinomial equals a product of binomials for all small compositions") {
    // Every composition of n <= 12 into at most 5 parts.
    for (long n = 0; n <= 12; ++n) {
        for (long k = 1; k <= 5; ++k) {
            std::vector<long> parts(static_cast<std::size_t>(k), 0);
            const auto visit = [&](auto&& self, std::size_t i, long left) -> void {
                if (i + 1 == parts.size()) {
                    parts[i] = left;
                    Integer expected = 1;
                    long remaining = n;
                    for (long p : parts) {
                        expected *= binomial(remaining, p);
                        remaining -= p;
                    }
                    // factorial ratio, computed independently
                    Integer denom = 1;
                    for (long p : parts) {
                        Integer f = 1;
                        for (long j = 2; j <= p; ++j) {
                            f *= j;
                        }
                        denom *= f;
                    }
                    Integer nf = 1;
                    for (long j = 2; j <= n; ++j) {
                        nf *= j;
                    }
                    CHECK(multinomial(n, parts) == expected);
                    CHECK(multinomial(n, parts) * denom == nf);
                    return;
                }
                for (long p = 0; p <= left; ++p) {
                    parts[i] = p;
                    self(self, i + 1, left - p);
                }
            };
            visit(visit, 0, n);
        }
    }
}

TEST_CASE("factored constants") {
    const FactoredConstant c(-1, {{2, -3}, {3, 2}, {7, 1}});
    CHECK(c.evaluate() == Rational(Integer(-63), Integer(8)));
    CHECK(evaluate_factored(c) == c.evaluate());
    CHECK_THROWS_AS(FactoredConstant(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredConstant(1, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredConstant(1, {{2, 1}, {2, 3}}), std::invalid_argument);
    CHECK(FactoredConstant(1, {}).evaluate() == Rational(1));
}

namespace {

// Counts standard Young tableaux by placing N, N-1, ... at removable corners.
Integer syt_bruteforce(std::vector<long> shape) {
    while (!shape.empty() && shape.back() == 0) {
        shape.pop_back();
    }
    if (shape.empty()) {
        return 1;
    }
    Integer total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (corner) {
            std::vector<long> smaller = shape;
            --smaller[i];
            total += syt_bruteforce(smaller);
        }
    }
    return total;
}

}  // namespace

TEST_CASE("hook length formula against corner removal") {
    for (long n = 0; n <= 10; ++n) {
        Integer sum_sq = 0;
        for (const auto& p : partitions_of(n, n, n)) {
            const Integer f = hook_length_count(p);
            CHECK(f == syt_bruteforce(p.parts()));
            CHECK(hook_length_count(p.conjugate()) == f);
            sum_sq += f * f;
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("partition enumeration") {
    // p(n) for n = 0..15.
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    for (long n = 0; n < static_cast<long>(p.size()); ++n) {
        const auto parts = partitions_of(n, n, n);
        CHECK(parts.size() == p[static_cast<std::size_t>(n)]);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            CHECK(std::lexicographical_compare(parts[i].parts().begin(), parts[i].parts().end(),
                                               parts[i - 1].parts().begin(), parts[i - 1].parts().end()));
        }
        for (const auto& q : parts) {
            CHECK(q.weight() == n);
        }
    }
    // Bounded first part equals bounded rows of the conjugate.
    for (long n = 0; n <= 12; ++n) {
        CHECK(partitions_of(n, 3, n).size() == partitions_of(n, n, 3).size());
    }
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2}).widened(3, 2) == Partition({4, 2, 2}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}
