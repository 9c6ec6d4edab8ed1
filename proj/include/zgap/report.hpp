// report.hpp
//
// Serialization of every result type and the command runner behind the CLI.
// Rationals travel as "p/q" strings in lowest terms; reals as the shortest
// decimal that round-trips. JSON objects have sorted keys, and CSV column
// orders are fixed:
//
//   lis      l,N,T,bruteforce,series,agree
//   moments  h,l,n1,n2,numerator,denominator,source,table_match

#pragma once

#include "zgap/bessel_series.hpp"
#include "zgap/hall_bound.hpp"
#include "zgap/joint_moments.hpp"
#include "zgap/lis_count.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zgap {

using Json = nlohmann::json;

/// Shortest decimal representation that parses back to the same double.
std::string format_real(double x);

Json to_json(const Rational& r);
Json to_json(const HalfPowerSeries& s);
Json to_json(const UnitaryIdentityReport& r);
Json to_json(const LisTable& t);
Json to_json(const MomentRecord& r);
Json to_json(const ArithmeticFactorEstimate& e);
Json to_json(const BoundCertificate& c);

std::string to_csv(const LisTable& t);

enum class Command { bounds, moments, lis, hankel, identity, arithfactor };
enum class OutputFormat { json, csv, text };

/// Name of the environment variable that overrides the default tolerance.
inline constexpr const char* kToleranceEnv = "ZGAP_TOL";

/// kDefaultTolerance unless ZGAP_TOL holds a positive number.
double default_tolerance();

struct RunConfig {
    Command command = Command::bounds;
    OutputFormat format = OutputFormat::json;
    long n = 1;                               // bounds
    long l = 4;                               // moments, lis, hankel, identity, arithfactor
    std::pair<long, long> pair{2, 1};         // moments
    long max_n = 9;                           // lis
    long terms = kDefaultSeriesTerms;         // hankel, identity
    double tol = kDefaultTolerance;           // bounds
    long prime_cutoff = kDefaultPrimeCutoff;  // arithfactor
    long inner_terms = kDefaultInnerTerms;    // arithfactor
    bool local_optimality = true;             // bounds
    /// Test mode: add one to the numerator of the tabulated b_{h,4}.
    std::optional<long> corrupt_h;
};

struct RunResult {
    int exit_code = 0;                  // 0 all checks passed, 1 a check failed, 2 bad request
    std::string output;                 // report body
    std::vector<std::string> failures;  // names of failed checks, for the diagnostic stream
};

/// Executes one command. Output depends only on the config.
RunResult run(const RunConfig& config);

}  // namespace zgap
