#include "zgap/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace zgap {

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Json to_json(const Rational& r) {
    return r.to_string();
}

Json to_json(const HalfPowerSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    return Json{{"offset", s.offset().to_string()}, {"coefficients", coeffs}};
}

Json to_json(const UnitaryIdentityReport& r) {
    Json out{{"l", r.l},
             {"terms", r.terms},
             {"sign", r.sign},
             {"holds", r.holds()},
             {"variable", "x = z^2"},
             {"group_side", to_json(r.group_side)},
             {"determinant_side", to_json(r.determinant_side)}};
    if (r.first_mismatch) {
        out["first_mismatch"] = Json{{"index", r.first_mismatch->index},
                                     {"z_exponent", r.first_mismatch->z_exponent},
                                     {"group_side", to_json(r.first_mismatch->group_side)},
                                     {"determinant_side", to_json(r.first_mismatch->determinant_side)}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

Json to_json(const LisTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        rows.push_back(Json{{"N", r.n},
                            {"T", r.t.get_str()},
                            {"bruteforce", r.bruteforce ? Json(r.bruteforce->get_str()) : Json(nullptr)},
                            {"series", r.series.get_str()},
                            {"agree", r.agree()}});
    }
    return Json{{"l", t.l}, {"rows", rows}, {"all_agree", t.all_agree()}};
}

Json to_json(const MomentRecord& r) {
    return Json{{"h", r.h},
                {"l", r.l},
                {"n1", r.n1},
                {"n2", r.n2},
                {"numerator", r.value.numerator().get_str()},
                {"denominator", r.value.denominator().get_str()},
                {"source", std::string(to_string(r.source))}};
}

Json to_json(const ArithmeticFactorEstimate& e) {
    return Json{{"l", e.l},
                {"prime_cutoff", e.prime_cutoff},
                {"inner_terms", e.inner_terms},
                {"primes_used", e.primes_used},
                {"value", format_real(e.value)},
                {"error_bound", format_real(e.error_bound)},
                {"inner_tail_relative", format_real(e.inner_tail)},
                {"product_tail_relative", format_real(e.product_tail)}};
}

Json to_json(const BoundCertificate& c) {
    Json checks = Json::array();
    for (const auto& k : c.checks) {
        checks.push_back(Json{{"name", k.name}, {"passed", k.passed}, {"residual", format_real(k.residual)},
                              {"note", k.note}});
    }
    Json capB = Json::array();
    for (const auto& b : c.capB) {
        capB.push_back(b.to_string());
    }
    const auto exact_real = [](const Rational& r) {
        return Json{{"exact", r.to_string()}, {"real", format_real(r.to_double())}};
    };
    Json out{{"n", c.n},
             {"tolerance", format_real(c.tolerance)},
             {"capB", capB},
             {"checks", checks},
             {"notes", c.notes},
             {"valid", c.valid()},
             {"threshold", c.threshold.to_decimal(2)}};
    if (!c.capB.empty()) {
        out["inputs"] = Json{{"A", c.inputs[0].to_string()},
                             {"B", c.inputs[1].to_string()},
                             {"C", c.inputs[2].to_string()},
                             {"D", c.inputs[3].to_string()}};
    }
    if (c.X) {
        out["X"] = exact_real(*c.X);
        out["bound"] = Json{{"sqrt_X_truncated", c.bound_decimal}, {"real", format_real(c.bound)}};
    }
    if (c.derived) {
        const auto& d = *c.derived;
        Json tau = Json::array();
        Json sigma = Json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            tau.push_back(d.tau[i].to_string());
            sigma.push_back(d.sigma[i].to_string());
        }
        out["params"] = Json{{"v1", exact_real(d.v1)},
                             {"v2", exact_real(d.v2)},
                             {"v3", exact_real(d.v3)},
                             {"lambda", exact_real(d.lambda)},
                             {"tau", tau},
                             {"sigma", sigma}};
    }
    return out;
}

std::string to_csv(const LisTable& t) {
    std::ostringstream os;
    os << "l,N,T,bruteforce,series,agree\n";
    for (const auto& r : t.rows) {
        os << t.l << ',' << r.n << ',' << r.t.get_str() << ',' << (r.bruteforce ? r.bruteforce->get_str() : "")
           << ',' << r.series.get_str() << ',' << (r.agree() ? "true" : "false") << '\n';
    }
    return os.str();
}

double default_tolerance() {
    if (const char* env = std::getenv(kToleranceEnv)) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) {
            return v;
        }
    }
    return kDefaultTolerance;
}

// --- command runner ------------------------------------------------------------

namespace {

class BadRequest : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    Json body;
    std::vector<std::string> failures;
    std::string csv;   // filled by commands that support CSV
    std::string text;  // human-readable summary
};

void record(Outcome& out, Json& checks, const std::string& name, bool passed) {
    checks.push_back(Json{{"name", name}, {"passed", passed}});
    if (!passed) {
        out.failures.push_back(name);
    }
}

Rational corrupt(const Rational& r) {
    return Rational(r.numerator() + 1, r.denominator());
}

Outcome run_bounds(const RunConfig& cfg) {
    if (cfg.n != 1 && cfg.n != 2) {
        throw BadRequest("bounds: --n must be 1 or 2");
    }
    CertifyOptions opts;
    opts.tol = cfg.tol;
    opts.check_local_optimality = cfg.local_optimality;
    if (cfg.corrupt_h) {
        MomentColumn col = table1_column(cfg.n);
        col.at(static_cast<std::size_t>(*cfg.corrupt_h)) = corrupt(col.at(static_cast<std::size_t>(*cfg.corrupt_h)));
        opts.column = col;
    }
    const BoundCertificate cert = certify_bound(cfg.n, opts);
    Outcome out;
    out.body = to_json(cert);
    out.body["command"] = "bounds";
    std::ostringstream text;
    text << "n = " << cert.n << "\n";
    if (cert.X) {
        text << "X = " << format_real(cert.X->to_double()) << "\n"
             << "sqrt(X) = " << cert.bound_decimal << " (threshold " << cert.threshold.to_decimal(2) << ")\n";
    }
    for (const auto& c : cert.checks) {
        text << (c.passed ? "PASS " : "FAIL ") << c.name << "  residual=" << format_real(c.residual) << "\n";
        if (!c.passed) {
            out.failures.push_back(c.name);
        }
    }
    text << "certificate " << (cert.valid() ? "valid" : "INVALID") << "\n";
    out.text = text.str();
    return out;
}

Outcome run_moments(const RunConfig& cfg) {
    const auto [n1, n2] = cfg.pair;
    const long l = cfg.l;
    if (l < 1) {
        throw BadRequest("moments: --l must be positive");
    }
    if (!((n1 == 2 && n2 == 1) || (n1 == 3 && n2 == 2))) {
        throw BadRequest("moments: only --pair 2,1 and 3,2 are supported");
    }
    if (n1 == 3 && l != 4) {
        throw BadRequest("moments: pair 3,2 is available only as tabulated data with l = 4");
    }
    if (cfg.corrupt_h && (l != 4 || *cfg.corrupt_h < 0 || *cfg.corrupt_h > 4)) {
        throw BadRequest("moments: --corrupt-table needs l = 4 and h in 0..4");
    }
    const long n = n2;

    Outcome out;
    Json checks = Json::array();
    Json records = Json::array();
    std::ostringstream csv;
    std::ostringstream text;
    csv << "h,l,n1,n2,numerator,denominator,source,table_match\n";

    std::vector<MomentRecord> computed;
    if (n1 == 2) {
        for (long h = 0; h <= l; ++h) {
            computed.push_back(MomentRecord{h, l, n1, n2, b_partition_sum(h, l), MomentSource::computed_partition_sum});
        }
    }
    std::optional<MomentColumn> table;
    if (l == 4) {
        table = table1_column(n);
        if (cfg.corrupt_h) {
            auto& entry = table->at(static_cast<std::size_t>(*cfg.corrupt_h));
            entry = corrupt(entry);
        }
    }

    const auto emit = [&](const MomentRecord& r, std::optional<bool> match) {
        Json j = to_json(r);
        j["table_match"] = match ? Json(*match) : Json(nullptr);
        records.push_back(j);
        csv << r.h << ',' << r.l << ',' << r.n1 << ',' << r.n2 << ',' << r.value.numerator().get_str() << ','
            << r.value.denominator().get_str() << ',' << to_string(r.source) << ','
            << (match ? (*match ? "true" : "false") : "") << '\n';
        text << "b_{" << r.h << "," << r.l << "}(" << r.n1 << "," << r.n2 << ") = " << r.value.to_string() << "  ["
             << to_string(r.source) << "]\n";
    };

    for (const auto& r : computed) {
        std::optional<bool> match;
        if (table) {
            match = r.value == (*table)[static_cast<std::size_t>(r.h)];
            record(out, checks, "table_match_h" + std::to_string(r.h), *match);
        }
        emit(r, match);
    }
    if (table) {
        for (long h = 0; h <= 4; ++h) {
            emit(MomentRecord{h, 4, n1, n2, (*table)[static_cast<std::size_t>(h)], MomentSource::paper_table},
                 std::nullopt);
        }
        if (n == 1) {
            const bool same = (*table)[4] == table1_value(0, 2);
            record(out, checks, "cross_column_b44_21_equals_b04_32", same);
        }
        const RatioSet ratios = ratio_set(*table, n);
        Json capB = Json::array();
        Json A = Json::array();
        for (const auto& b : ratios.capB) {
            capB.push_back(b.to_string());
        }
        for (long h = 1; h <= 4; ++h) {
            const Rational& a = ratios.A[static_cast<std::size_t>(h - 1)];
            A.push_back(a.to_string());
            record(out, checks, "a_ratio_match_printed_h" + std::to_string(h), a == printed_ratioA(h, n));
        }
        out.body["ratios"] = Json{{"capB", capB}, {"A", A}};
        bool positive = true;
        for (const auto& b : ratios.capB) {
            positive = positive && b.sign() > 0;
        }
        record(out, checks, "capB_positive", positive);
    } else {
        const std::vector<Rational> values = [&] {
            std::vector<Rational> v;
            for (const auto& r : computed) {
                v.push_back(r.value);
            }
            return v;
        }();
        Json capB = Json::array();
        bool positive = true;
        for (long h = 0; h <= l; ++h) {
            const Rational b = capB_from(values, h);
            positive = positive && b.sign() > 0;
            capB.push_back(b.to_string());
        }
        out.body["ratios"] = Json{{"capB", capB}};
        record(out, checks, "capB_positive", positive);
    }

    out.body["command"] = "moments";
    out.body["records"] = records;
    out.body["checks"] = checks;
    out.csv = csv.str();
    out.text = text.str();
    return out;
}

Outcome run_lis(const RunConfig& cfg) {
    if (cfg.l < 1 || cfg.max_n < 0) {
        throw BadRequest("lis: need --l >= 1 and --max-n >= 0");
    }
    const LisTable table = lis_table(cfg.l, cfg.max_n);
    Outcome out;
    out.body = to_json(table);
    out.body["command"] = "lis";
    out.csv = to_csv(table);
    std::ostringstream text;
    for (const auto& r : table.rows) {
        text << "T_" << table.l << "(" << r.n << ") = " << r.t.get_str() << (r.agree() ? "" : "  MISMATCH") << "\n";
        if (!r.agree()) {
            out.failures.push_back("three_way_agreement_N" + std::to_string(r.n));
        }
    }
    out.text = text.str();
    return out;
}

Outcome run_hankel(const RunConfig& cfg) {
    if (cfg.l < 1 || cfg.terms < 1) {
        throw BadRequest("hankel: need --l >= 1 and --terms >= 1");
    }
    const HalfPowerSeries s = hankel_bessel_taylor(cfg.l, cfg.terms);
    Outcome out;
    Json checks = Json::array();
    record(out, checks, "offset_is_l_squared_over_2", s.twice_offset() == cfg.l * cfg.l);
    const int sign = ((cfg.l * (cfg.l - 1) / 2) % 2 == 0) ? 1 : -1;
    record(out, checks, "leading_coefficient_law", Rational(sign) * s.coeff(0) == ks_coefficient(cfg.l));
    out.body = Json{{"command", "hankel"}, {"l", cfg.l}, {"terms", cfg.terms}, {"series", to_json(s)},
                    {"checks", checks}};
    std::ostringstream text;
    text << "det[I_{j+k+1}(2 sqrt x)], l = " << cfg.l << ", offset " << s.offset().to_string() << "\n";
    for (std::size_t k = 0; k < s.truncation_order(); ++k) {
        text << "  c" << k << " = " << s.coeff(k).to_string() << "\n";
    }
    out.text = text.str();
    return out;
}

Outcome run_identity(const RunConfig& cfg) {
    if (cfg.l < 1 || cfg.l > 6 || cfg.terms < 1) {
        throw BadRequest("identity: need 1 <= --l <= 6 and --terms >= 1");
    }
    const UnitaryIdentityReport r = verify_unitary_identity(cfg.l, cfg.terms);
    Outcome out;
    out.body = to_json(r);
    out.body["command"] = "identity";
    if (!r.holds()) {
        out.failures.push_back("unitary_identity");
    }
    std::ostringstream text;
    text << "l = " << r.l << ", sign " << r.sign << ", " << r.terms << " coefficients: "
         << (r.holds() ? "identity holds" : "MISMATCH") << "\n";
    if (r.first_mismatch) {
        text << "  first mismatch at z^" << r.first_mismatch->z_exponent << ": "
             << r.first_mismatch->group_side.to_string() << " vs "
             << r.first_mismatch->determinant_side.to_string() << "\n";
    }
    out.text = text.str();
    return out;
}

Outcome run_arithfactor(const RunConfig& cfg) {
    if (cfg.l < 1 || cfg.prime_cutoff < 2 || cfg.inner_terms < 1) {
        throw BadRequest("arithfactor: need --l >= 1, --cutoff >= 2, --inner-terms >= 1");
    }
    const ArithmeticFactorEstimate e = arithmetic_factor(cfg.l, cfg.prime_cutoff, cfg.inner_terms);
    Outcome out;
    Json checks = Json::array();
    record(out, checks, "finite_positive", std::isfinite(e.value) && e.value > 0.0);
    record(out, checks, "error_bound_finite", std::isfinite(e.error_bound));
    out.body = to_json(e);
    out.body["command"] = "arithfactor";
    out.body["checks"] = checks;
    out.text = "c_" + std::to_string(e.l) + " ~ " + format_real(e.value) + " +- " + format_real(e.error_bound) +
               " (primes <= " + std::to_string(e.prime_cutoff) + ")\n";
    return out;
}

}  // namespace

RunResult run(const RunConfig& config) {
    RunResult result;
    Outcome out;
    try {
        switch (config.command) {
            case Command::bounds:
                out = run_bounds(config);
                break;
            case Command::moments:
                out = run_moments(config);
                break;
            case Command::lis:
                out = run_lis(config);
                break;
            case Command::hankel:
                out = run_hankel(config);
                break;
            case Command::identity:
                out = run_identity(config);
                break;
            case Command::arithfactor:
                out = run_arithfactor(config);
                break;
        }
    } catch (const std::invalid_argument& e) {
        result.exit_code = 2;
        result.failures.push_back(e.what());
        return result;
    }

    switch (config.format) {
        case OutputFormat::json:
            result.output = out.body.dump(2) + "\n";
            break;
        case OutputFormat::csv:
            if (out.csv.empty()) {
                result.exit_code = 2;
                result.failures.push_back("csv output is available for lis and moments only");
                return result;
            }
            result.output = out.csv;
            break;
        case OutputFormat::text:
            result.output = out.text;
            break;
    }
    result.failures = std::move(out.failures);
    result.exit_code = result.failures.empty() ? 0 : 1;
    return result;
}

}  // namespace zgap
