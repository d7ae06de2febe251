// Command-line front end.  Subcommands:
//
//   count      exact count for one (k, n), by any or all methods
//   verify     cross-check battery for one k
//   table      convergence table (exact vs growth law) in csv/json/md
//   algo-a     symbolic elimination: leading terms vs the closed form
//   constants  the constants and shape of the growth law for one k
//
// Data goes to stdout, diagnostics to stderr.  Exit codes: 0 on success,
// 1 on a verification failure (or internal error), 2 on usage errors.
// KCROSS_PRECISION_BITS sets the default float precision (>= 53).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kcross/asymptotics.hpp"
#include "kcross/bessel_series.hpp"
#include "kcross/elimination.hpp"
#include "kcross/matchings.hpp"
#include "kcross/reporting.hpp"
#include "kcross/tableaux.hpp"

namespace {

constexpr long kDefaultPrecision = 256;

long env_precision() {
    const char* raw = std::getenv("KCROSS_PRECISION_BITS");
    if (raw == nullptr || *raw == '\0') return kDefaultPrecision;
    char* end = nullptr;
    long bits = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || bits < 53)
        throw std::invalid_argument(
            "KCROSS_PRECISION_BITS must be an integer >= 53, got '" + std::string(raw) + "'");
    return bits;
}

kcross::CountMethod parse_method(const std::string& name) {
    if (name == "brute") return kcross::CountMethod::Brute;
    if (name == "tableau") return kcross::CountMethod::Tableau;
    if (name == "det") return kcross::CountMethod::Det;
    throw std::invalid_argument("unknown method '" + name + "'");
}

kcross::Int count_one(kcross::CountMethod method, int k, long n) {
    switch (method) {
        case kcross::CountMethod::Brute:
            return kcross::count_bruteforce(k, static_cast<int>(n));
        case kcross::CountMethod::Tableau:
            return kcross::count_tableau_walks(k, n);
        case kcross::CountMethod::Det:
            return kcross::count_by_determinant(k, static_cast<int>(n)).back();
    }
    throw std::logic_error("count_one: unreachable");
}

int run_count(int k, long n, const std::string& method) {
    if (method != "all") {
        std::cout << count_one(parse_method(method), k, n).get_str() << "\n";
        return 0;
    }
    std::vector<kcross::Int> values;
    if (n <= kcross::kBruteForceGuard) {
        values.push_back(count_one(kcross::CountMethod::Brute, k, n));
    } else {
        std::cerr << "note: skipping brute force beyond n = " << kcross::kBruteForceGuard
                  << "\n";
    }
    values.push_back(count_one(kcross::CountMethod::Tableau, k, n));
    values.push_back(count_one(kcross::CountMethod::Det, k, n));
    bool agree = true;
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) line += ' ';
        line += values[i].get_str();
        if (values[i] != values[0]) agree = false;
    }
    std::cout << line << (agree ? " AGREE" : " DISAGREE") << "\n";
    return agree ? 0 : 1;
}

// One named check; failures report detail on stderr.
struct CheckReport {
    bool all_passed = true;
    void record(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << name << (ok ? " PASS" : " FAIL") << "\n";
        if (!ok) {
            all_passed = false;
            if (!detail.empty()) std::cerr << name << ": " << detail << "\n";
        }
    }
};

int run_verify(int k, long nmax) {
    using namespace kcross;
    CheckReport report;

    {
        std::vector<Int> dp = tableau_walk_counts(k, nmax);
        std::vector<Int> det = count_by_determinant(k, static_cast<int>(nmax));
        bool ok = dp == det;
        std::string detail;
        long brute_top = std::min<long>(nmax, 6);
        for (long n = 0; ok && n <= brute_top; ++n) {
            if (dp[n] != count_bruteforce(k, static_cast<int>(n))) {
                ok = false;
                detail = "brute force disagrees at n = " + std::to_string(n);
            }
        }
        report.record("counts-agree", ok, detail);
    }

    EliminationRun run = run_elimination(k, default_order_bound(k), true);
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; ok && i <= k - 1; ++i) {
            for (int j = 1; ok && j <= k - 1; ++j) {
                LeadingTerm got = run.matrix[i - 1][j - 1].leading_term();
                LeadingTerm want = expected_leading_term(i, j);
                if (!(got == want)) {
                    ok = false;
                    detail = "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             "): got order " + std::to_string(got.order) + " coeff " +
                             got.coeff.str() + ", want order " + std::to_string(want.order) +
                             " coeff " + want.coeff.str();
                }
            }
        }
        report.record("leading-terms", ok, detail);
    }
    {
        bool ok = true;
        for (const auto& step : run.steps)
            for (std::size_t i = 0; ok && i < step.matrix.size(); ++i)
                for (std::size_t j = i + 1; ok && j < step.matrix.size(); ++j)
                    ok = step.matrix[i][j] == step.matrix[j][i];
        report.record("step-symmetry", ok);
    }
    {
        // entries settled by round t stay fixed afterwards
        bool ok = true;
        for (std::size_t s = 0; ok && s + 1 < run.steps.size(); ++s) {
            int t = run.steps[s].pivot;
            for (int i = 1; ok && i <= t; ++i)
                for (int j = 1; ok && j <= t; ++j)
                    for (std::size_t later = s + 1; ok && later < run.steps.size(); ++later)
                        ok = run.steps[later].matrix[i - 1][j - 1] ==
                             run.steps[s].matrix[i - 1][j - 1];
        }
        report.record("entry-stability", ok);
    }
    {
        const int H = default_order_bound(k);
        LaurentMatrix start(k - 1, std::vector<LaurentPoly>(k - 1, LaurentPoly(H)));
        for (int i = 1; i <= k - 1; ++i)
            for (int j = 1; j <= k - 1; ++j)
                start[i - 1][j - 1] = bessel_diff_expansion(i, j, H);
        report.record("determinant-invariant", laurent_det(start) == laurent_det(run.matrix));
    }
    {
        bool ok = true;
        std::string detail;
        try {
            gamma_half_matrix_det(k);
        } catch (const std::logic_error& e) {
            ok = false;
            detail = e.what();
        }
        report.record("gamma-det-closed-form", ok, detail);
    }
    return report.all_passed ? 0 : 1;
}

int run_table(int k, long nmax, bool geometric, const std::string& method,
              const std::string& format, const std::string& output, long precision,
              int jobs) {
    std::vector<long> ns;
    if (geometric) {
        for (long n = 1; n <= nmax; n *= 2) ns.push_back(n);
    } else {
        for (long n = 1; n <= nmax; ++n) ns.push_back(n);
    }
    auto rows = kcross::convergence_table(k, ns, parse_method(method),
                                          static_cast<mpfr_prec_t>(precision), jobs);
    std::string rendered;
    if (format == "csv") {
        rendered = kcross::table_csv(k, rows);
    } else if (format == "json") {
        rendered = kcross::table_json(k, rows).dump(2);
        rendered += "\n";
    } else if (format == "md") {
        rendered = kcross::table_markdown(k, rows);
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    if (output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + output + "' for writing");
        out << rendered;
        if (!out.flush()) throw std::runtime_error("write to '" + output + "' failed");
        std::cerr << "wrote " << rows.size() << " rows to " << output << "\n";
    }
    return 0;
}

int run_algo_a(int k, long order_bound, const std::string& dump_path) {
    using namespace kcross;
    const int H = order_bound > 0 ? static_cast<int>(order_bound) : default_order_bound(k);
    EliminationRun run = run_elimination(k, H, !dump_path.empty());

    bool all_match = true;
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            LeadingTerm want = expected_leading_term(i, j);
            std::string got_text;
            bool ok = false;
            try {
                LeadingTerm got = run.matrix[i - 1][j - 1].leading_term();
                ok = got == want;
                got_text = "order " + std::to_string(got.order) + " coeff " + got.coeff.str();
            } catch (const ZeroPolynomialError&) {
                got_text = "zero polynomial";
            }
            all_match = all_match && ok;
            std::cout << "entry " << i << " " << j << ": " << got_text << " (expected order "
                      << std::to_string(want.order) << " coeff " << want.coeff.str() << ") "
                      << (ok ? "ok" : "MISMATCH") << "\n";
        }
    }
    std::cout << (all_match ? "ALL MATCH" : "LEADING TERMS MISMATCH") << "\n";

    if (!dump_path.empty()) {
        std::ofstream out(dump_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + dump_path + "' for writing");
        out << elimination_json(run).dump(2) << "\n";
        if (!out.flush()) throw std::runtime_error("write to '" + dump_path + "' failed");
        std::cerr << "wrote elimination record to " << dump_path << "\n";
    }
    return all_match ? 0 : 1;
}

int run_constants(int k, long precision, const std::string& format) {
    using namespace kcross;
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(precision);
    ComparisonSpec spec = comparison_spec(k);
    AsymptoticForm form = egf_asymptotic(k);
    PiScalar growth = growth_constant(k);

    auto approx = [&](const PiScalar& x) { return to_float(x, bits).str(kTableFloatDigits); };

    if (format == "json") {
        nlohmann::json subtraction = nlohmann::json::array();
        for (const auto& c : spec.subtraction) subtraction.push_back(c.str());
        nlohmann::json doc{{"k", k},
                           {"base", base_function_name(spec.base)},
                           {"scale", spec.scale},
                           {"shift", spec.shift},
                           {"bessel_order", spec.bessel_order},
                           {"exp_rate", form.exp_rate},
                           {"power", form.power.str()},
                           {"egf_constant", form.constant.str()},
                           {"egf_constant_approx", approx(form.constant)},
                           {"normalizer", spec.normalizer.str()},
                           {"normalizer_approx", approx(spec.normalizer)},
                           {"growth_constant", growth.str()},
                           {"growth_constant_approx", approx(growth)},
                           {"subtraction", std::move(subtraction)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (format != "text") throw std::invalid_argument("unknown format '" + format + "'");

    std::cout << "k = " << k << "\n";
    std::cout << "egf form: constant * exp(rate * z) * z^(-power)\n";
    std::cout << "  constant = " << form.constant.str() << " (~ " << approx(form.constant)
              << ")\n";
    std::cout << "  rate = " << form.exp_rate << "\n";
    std::cout << "  power = " << form.power.str() << "\n";
    std::cout << "comparison function: base " << base_function_name(spec.base) << ", scale "
              << spec.scale << ", shift " << spec.shift << "\n";
    std::cout << "  normalizer = " << spec.normalizer.str() << " (~ " << approx(spec.normalizer)
              << ")\n";
    std::cout << "count growth: constant * n^(-power) * " << spec.scale << "^(2n)\n";
    std::cout << "  constant = " << growth.str() << " (~ " << approx(growth) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic counting of matchings with bounded crossing number"};
    app.require_subcommand(1);

    int k = 0;
    long n = 0, nmax = 0, order_bound = 0, precision = 0;
    int jobs = 1;
    bool geometric = false;
    std::string method = "tableau", format, output, dump_path;

    auto* cmd_count = app.add_subcommand("count", "exact count for one (k, n)");
    cmd_count->add_option("--k", k, "crossing bound (>= 2)")->required()->check(CLI::Range(2, 1000000));
    cmd_count->add_option("--n", n, "number of arcs (>= 0)")->required()->check(CLI::NonNegativeNumber);
    cmd_count->add_option("--method", method, "brute|tableau|det|all")
        ->check(CLI::IsMember({"brute", "tableau", "det", "all"}));

    auto* cmd_verify = app.add_subcommand("verify", "cross-check battery for one k");
    cmd_verify->add_option("--k", k, "crossing bound (>= 2)")->required()->check(CLI::Range(2, 1000000));
    long verify_nmax = 12;
    cmd_verify->add_option("--nmax", verify_nmax, "count agreement up to this n (default 12)")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_table = app.add_subcommand("table", "convergence table: exact counts vs growth law");
    cmd_table->add_option("--k", k, "crossing bound (>= 2)")->required()->check(CLI::Range(2, 1000000));
    cmd_table->add_option("--nmax", nmax, "largest n")->required()->check(CLI::PositiveNumber);
    cmd_table->add_flag("--geometric", geometric, "use n = 1, 2, 4, ... instead of every n");
    cmd_table->add_option("--method", method, "brute|tableau|det (default tableau)")
        ->check(CLI::IsMember({"brute", "tableau", "det"}));
    std::string table_format = "csv";
    cmd_table->add_option("--format", table_format, "csv|json|md (default csv)")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    cmd_table->add_option("--output", output, "write the table to this file instead of stdout");
    cmd_table->add_option("--precision", precision, "float precision in bits (>= 53)");
    cmd_table->add_option("--jobs", jobs, "parallel float evaluations")->check(CLI::PositiveNumber);

    auto* cmd_algo = app.add_subcommand("algo-a", "symbolic elimination and its leading terms");
    cmd_algo->add_option("--k", k, "crossing bound (>= 2)")->required()->check(CLI::Range(2, 1000000));
    cmd_algo->add_option("--H", order_bound, "truncation order (default (k-1)^2 + 4)")
        ->check(CLI::PositiveNumber);
    cmd_algo->add_option("--dump", dump_path, "write the full run as JSON to this file");

    auto* cmd_const = app.add_subcommand("constants", "growth-law constants for one k");
    cmd_const->add_option("--k", k, "crossing bound (>= 2)")->required()->check(CLI::Range(2, 1000000));
    cmd_const->add_option("--precision", precision, "float precision in bits (>= 53)");
    std::string const_format = "text";
    cmd_const->add_option("--format", const_format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (precision == 0) precision = env_precision();
        if (precision < 53) throw std::invalid_argument("precision must be at least 53 bits");
        if (cmd_count->parsed()) return run_count(k, n, method);
        if (cmd_verify->parsed()) return run_verify(k, verify_nmax);
        if (cmd_table->parsed())
            return run_table(k, nmax, geometric, method, table_format, output, precision, jobs);
        if (cmd_algo->parsed()) return run_algo_a(k, order_bound, dump_path);
        if (cmd_const->parsed()) return run_constants(k, precision, const_format);
        std::cerr << "kcross: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kcross: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kcross: " << e.what() << "\n";
        return 1;
    }
}
