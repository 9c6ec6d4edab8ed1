// Acceptance suite: one PASS/FAIL line per criterion. The optional argument is
// the path of the zgap executable, used for the CLI determinism check.

#include "zgap/bessel_series.hpp"
#include "zgap/combinatorics.hpp"
#include "zgap/hall_bound.hpp"
#include "zgap/joint_moments.hpp"
#include "zgap/lis_count.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace zgap;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

Outcome table_reproduction() {
    Outcome o;
    for (long h = 0; h <= 4; ++h) {
        o.require(b_partition_sum(h, 4) == table1_value(h, 1), "b_{" + std::to_string(h) + ",4}(2,1) differs");
    }
    return o;
}

Outcome a_ratios() {
    Outcome o;
    for (long n = 1; n <= 2; ++n) {
        for (long h = 1; h <= 4; ++h) {
            o.require(ratioA(h, n) == printed_ratioA(h, n),
                      "A(" + std::to_string(h) + ",4;" + std::to_string(n) + ") differs");
        }
    }
    return o;
}

Outcome bound_chain(long n, double x_expected, const std::array<double, 4>& params_expected) {
    Outcome o;
    const BoundCertificate cert = certify_bound(n, CertifyOptions{1e-8, std::nullopt, true});
    if (!cert.X || !cert.derived) {
        o.require(false, "no closed-form X");
        return o;
    }
    const double x = cert.X->to_double();
    o.require(std::abs(x - x_expected) < 1e-5, "X = " + std::to_string(x));
    const DerivedParams& d = *cert.derived;
    const std::array<double, 4> got{d.v1.to_double(), d.v2.to_double(), d.v3.to_double(), d.lambda.to_double()};
    const char* names[] = {"v1", "v2", "v3", "lambda"};
    for (std::size_t i = 0; i < 4; ++i) {
        o.require(std::abs(got[i] - params_expected[i]) < 1e-4, std::string(names[i]) + " = " + std::to_string(got[i]));
    }
    const double pi_dev = std::abs(rational_integral_check(d.params(), 1e-8).value);
    o.require(pi_dev < 1e-6, "pi-check deviation " + std::to_string(pi_dev));
    o.require(*cert.X > bound_threshold(n) * bound_threshold(n), "sqrt(X) not above threshold");
    o.require(cert.valid(), "certificate invalid");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("sqrt(X) = ") + cert.bound_decimal;
    return o;
}

Outcome lambda_equivalence() {
    Outcome o;
    const RatioSet r = ratio_set(table1_column(1), 1);
    const auto& [A, B, C, D] = r.A;
    const DerivedParams d = derive_params(A, B, C, D, hall_closed_form_X(A, B, C, D));
    const WirtingerParams p = d.params();
    const double solved = lambda_solve(p.v, 4, 1e-8);
    o.require(std::abs(solved - d.lambda.to_double()) < 1e-4, "lambda_solve = " + std::to_string(solved));
    return o;
}

Outcome g_values() {
    Outcome o;
    const long expected[] = {1, 2, 42, 24024};
    for (long l = 1; l <= 4; ++l) {
        o.require(ks_coefficient(l) * Rational(factorial(l * l)) == Rational(expected[l - 1]),
                  "g_" + std::to_string(l));
    }
    return o;
}

Outcome bessel_structure() {
    Outcome o;
    for (long l = 1; l <= 4; ++l) {
        const HalfPowerSeries s = hankel_bessel_taylor(l, kDefaultSeriesTerms);
        o.require(s.offset() == Rational(Integer(l * l), Integer(2)), "offset for l=" + std::to_string(l));
        Rational lead(1);
        for (long j = 0; j < l; ++j) {
            lead *= Rational(factorial(j), factorial(j + l));
        }
        if ((l * (l - 1) / 2) % 2 != 0) {
            lead = -lead;
        }
        o.require(s.coeff(0) == lead, "leading coefficient for l=" + std::to_string(l));
    }
    return o;
}

Outcome lis_oracle() {
    Outcome o;
    long equalities = 0;
    for (long l = 1; l <= 5; ++l) {
        for (long n = 1; n <= 9; ++n) {
            const Integer rsk = t_count_rsk(l, n);
            const bool ok = t_count_bruteforce(l, n) == rsk && t_count_series(l, n) == rsk;
            o.require(ok, "T_" + std::to_string(l) + "(" + std::to_string(n) + ")");
            equalities += ok ? 1 : 0;
        }
    }
    Integer catalan = 1;  // C_0
    for (long n = 0; n <= 14; ++n) {
        o.require(t_count_series(2, n) == catalan && t_count_rsk(2, n) == catalan,
                  "Catalan at N=" + std::to_string(n));
        catalan = catalan * 2 * (2 * n + 1) / (n + 2);
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(equalities) + " three-way equalities";
    return o;
}

Outcome unitary_identity() {
    Outcome o;
    for (long l = 1; l <= 3; ++l) {
        o.require(verify_unitary_identity(l, 8).holds(), "l=" + std::to_string(l));
    }
    return o;
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    status = ::pclose(pipe);
    return out;
}

Outcome property_suite(const std::string& cli) {
    Outcome o;
    // Corrupt one table constant.
    {
        MomentColumn col = table1_column(1);
        col[2] = Rational(col[2].numerator() + 1, col[2].denominator());
        CertifyOptions opts;
        opts.column = col;
        o.require(!certify_bound(1, opts).valid(), "corrupted table constant still certifies");
    }
    // Corrupt one series coefficient.
    {
        HalfPowerSeries group = group_integral_series(3, 3, 8);
        group.set_coeff(4, group.coeff(4) * Rational(2));
        o.require(!compare_unitary_identity(3, group, hankel_bessel_taylor(3, 8)).holds(),
                  "corrupted series coefficient still verifies");
    }
    // Monotone lambda at the first certified point.
    {
        const RatioSet r = ratio_set(table1_column(1), 1);
        const auto& [A, B, C, D] = r.A;
        const WirtingerParams p = derive_params(A, B, C, D, hall_closed_form_X(A, B, C, D)).params();
        std::vector<double> bigger = p.v;
        for (double& v : bigger) {
            v *= 1.1;
        }
        o.require(lambda_solve(bigger, 4, 1e-8) > lambda_solve(p.v, 4, 1e-8), "lambda not monotone in v");
    }
    // CLI determinism.
    if (cli.empty()) {
        o.require(false, "zgap executable path not given");
        return o;
    }
    const char* commands[] = {"bounds --n 1",          "bounds --n 2 --format text", "moments --l 4 --pair 2,1",
                              "moments --format csv",  "lis --l 3 --max-n 9",        "hankel --l 4 --terms 12",
                              "identity --l 3",        "arithfactor --l 2"};
    for (const char* c : commands) {
        int s1 = 0;
        int s2 = 0;
        const std::string a = capture("'" + cli + "' " + c + " 2>/dev/null", s1);
        const std::string b = capture("'" + cli + "' " + c + " 2>/dev/null", s2);
        o.require(!a.empty() && a == b && s1 == 0 && s2 == 0, std::string("cli ") + c);
    }
    int s = 0;
    capture("'" + cli + "' moments --l 4 --pair 2,1 --corrupt-table 1 >/dev/null 2>&1", s);
    o.require(s != 0, "corrupted moments run exited 0");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 table reproduction (exact)", table_reproduction},
        {"2 A-ratio reproduction (exact)", a_ratios},
        {"3 n=1 chain", [] { return bound_chain(1, 3.93116, {0.95297, 1.01903, 1.07681, 0.98492}); }},
        {"4 n=2 chain", [] { return bound_chain(2, 2.94783, {0.86987, 0.87121, 0.89954, 0.89144}); }},
        {"5 lambda-equation equivalence", lambda_equivalence},
        {"6 g-values (exact)", g_values},
        {"7 Bessel determinant structure", bessel_structure},
        {"8 LIS three-way oracle", lis_oracle},
        {"9 unitary-integral identity", unitary_identity},
        {"10 property suite", [&] { return property_suite(cli); }},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : "  (" + o.detail + ")")
                  << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " passed\n";
    return failures == 0 ? 0 : 1;
}
