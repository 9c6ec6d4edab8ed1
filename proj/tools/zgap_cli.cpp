#include "zgap/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

std::pair<long, long> parse_pair(const std::string& s) {
    std::istringstream is(s);
    long a = 0;
    long b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) {
        throw CLI::ValidationError("--pair", "expected two integers separated by a comma, e.g. 2,1");
    }
    return {a, b};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and certified computations for zero gaps of derivatives of Z(t)"};
    app.require_subcommand(1);

    zgap::RunConfig cfg;
    cfg.tol = zgap::default_tolerance();
    std::string format = "json";
    std::string output;
    std::string pair = "2,1";
    long corrupt = -1;
    bool no_local = false;

    const std::map<std::string, zgap::OutputFormat> formats{
        {"json", zgap::OutputFormat::json}, {"csv", zgap::OutputFormat::csv}, {"text", zgap::OutputFormat::text}};

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("-o,--output", output, "Write the report to this file instead of stdout");
    };

    auto* bounds = app.add_subcommand("bounds", "Certify the gap bound for Z^(n)");
    bounds->add_option("--n", cfg.n, "Derivative order (1 or 2)");
    bounds->add_option("--tol", cfg.tol, "Numerical tolerance (default: $ZGAP_TOL or 1e-8)")
        ->check(CLI::PositiveNumber);
    bounds->add_option("--corrupt-table", corrupt, "Add one to the numerator of the tabulated b_{h,4}")
        ->check(CLI::Range(0, 4));
    bounds->add_flag("--no-local-optimality", no_local, "Skip the perturbation check");
    common(bounds);

    auto* moments = app.add_subcommand("moments", "Joint-moment coefficients b_{h,l}");
    moments->add_option("--l", cfg.l, "Moment order l");
    moments->add_option("--pair", pair, "Derivative pair n1,n2 (2,1 or 3,2)");
    moments->add_option("--corrupt-table", corrupt, "Add one to the numerator of the tabulated b_{h,4}")
        ->check(CLI::Range(0, 4));
    common(moments);

    auto* lis = app.add_subcommand("lis", "Counts of permutations by longest increasing subsequence");
    lis->add_option("--l", cfg.l, "Maximum increasing subsequence length");
    lis->add_option("--max-n", cfg.max_n, "Largest N");
    common(lis);

    auto* hankel = app.add_subcommand("hankel", "Taylor series of the Hankel determinant of Bessel functions");
    hankel->add_option("--l", cfg.l, "Matrix size");
    hankel->add_option("--terms", cfg.terms, "Number of coefficients");
    common(hankel);

    auto* identity = app.add_subcommand("identity", "Check the unitary-group integral against its determinant");
    identity->add_option("--l", cfg.l, "Matrix size (1..6)");
    identity->add_option("--terms", cfg.terms, "Number of coefficients");
    common(identity);

    auto* arith = app.add_subcommand("arithfactor", "Truncated Euler product for the arithmetic factor");
    arith->add_option("--l", cfg.l, "Moment order l");
    arith->add_option("--cutoff", cfg.prime_cutoff, "Largest prime included");
    arith->add_option("--inner-terms", cfg.inner_terms, "Terms kept in each local factor");
    common(arith);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.pair = parse_pair(pair);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    if (bounds->parsed()) {
        cfg.command = zgap::Command::bounds;
    } else if (moments->parsed()) {
        cfg.command = zgap::Command::moments;
    } else if (lis->parsed()) {
        cfg.command = zgap::Command::lis;
    } else if (hankel->parsed()) {
        cfg.command = zgap::Command::hankel;
    } else if (identity->parsed()) {
        cfg.command = zgap::Command::identity;
    } else {
        cfg.command = zgap::Command::arithfactor;
    }
    cfg.format = formats.at(format);
    cfg.local_optimality = !no_local;
    if (corrupt >= 0) {
        cfg.corrupt_h = corrupt;
    }

    zgap::RunResult result;
    try {
        result = zgap::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!result.output.empty()) {
        if (output.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out || !(out << result.output)) {
                std::cerr << "error: cannot write " << output << "\n";
                return 2;
            }
        }
    }
    for (const auto& f : result.failures) {
        std::cerr << (result.exit_code == 2 ? "error: " : "check failed: ") << f << "\n";
    }
    return result.exit_code;
}
