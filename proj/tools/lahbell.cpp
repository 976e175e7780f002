#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lahbell/bigfloat.hpp"
#include "lahbell/dobinski.hpp"
#include "lahbell/oracle.hpp"
#include "lahbell/poly.hpp"
#include "lahbell/tables.hpp"
#include "lahbell/verify.hpp"

namespace {

using lahbell::ExactRat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct TableArgs {
    std::string kind;
    int n_max = 0;
    int r = 0;
    bool has_r = false;
    std::string lambda_text;
    bool has_lambda = false;
    std::string format = "csv";
};

struct PolyArgs {
    std::string family;
    int n = 0;
    int r = 0;
    bool has_r = false;
    std::string x_text;
    bool has_x = false;
    std::string lambda_text;
    bool has_lambda = false;
};

struct VerifyArgs {
    std::string suite;
    lahbell::SuiteBounds bounds;
    int jobs = 1;
    bool inject_fault = false;
};

struct OracleArgs {
    int n = 0;
};

struct DobinskiArgs {
    int n = 0;
    int r = 0;
    std::string x_text;
    std::string lambda_text;
    bool has_lambda = false;
    std::string eps_text = "1e-30";
    int precision = 256;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int unsupported(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUnsupported;
}

// Entry renderers per table kind. Integer kinds reuse the Triangle type;
// the lambda kind is generated from the polynomial family directly.
int run_table(const TableArgs& a) {
    const bool is_lambda_kind = a.kind == "lambda-rlah";
    const bool needs_r = a.kind == "rlah" || is_lambda_kind;
    if (needs_r && !a.has_r) return usage_error("--r is required for kind " + a.kind);
    if (!needs_r && a.has_r) return usage_error("--r does not apply to kind " + a.kind);
    if (!is_lambda_kind && a.has_lambda)
        return usage_error("--lambda only applies to kind lambda-rlah");

    std::optional<ExactRat> lambda;
    if (a.has_lambda) lambda = lahbell::parse_rational(a.lambda_text);

    if (a.format == "bfile" && is_lambda_kind)
        return unsupported(
            "bfile output requires integer entries; lambda-rlah entries are "
            "polynomials or rationals");

    // cell(n, k) -> string for csv/bfile; JSON handled below.
    auto cell = [&](int n, int k) -> std::string {
        if (a.kind == "lah") return lahbell::lah(n, k).get_str();
        if (a.kind == "rlah") return lahbell::r_lah(n, k, a.r).get_str();
        if (a.kind == "stirling2") return lahbell::stirling2(n, k).get_str();
        lahbell::Poly p = lahbell::lambda_r_lah(n, k, a.r);
        if (lambda) return lahbell::rational_str(p.eval(*lambda));
        return p.str();
    };

    if (a.format == "csv") {
        std::cout << "n,k,value\n";
        for (int n = 0; n <= a.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                std::cout << n << "," << k << "," << cell(n, k) << "\n";
        return kExitPass;
    }
    if (a.format == "bfile") {
        for (int n = 0; n <= a.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                std::cout << n * (n + 1) / 2 + k << " " << cell(n, k) << "\n";
        return kExitPass;
    }

    ordered_json rec;
    rec["schema_version"] = "1";
    rec["command"] = "table";
    ordered_json params;
    params["kind"] = a.kind;
    params["n_max"] = std::to_string(a.n_max);
    if (needs_r) params["r"] = std::to_string(a.r);
    if (lambda) params["lambda"] = lahbell::rational_str(*lambda);
    params["format"] = a.format;
    rec["params"] = params;
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= a.n_max; ++n) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k <= n; ++k) {
            if (is_lambda_kind && !lambda) {
                // lambda left formal: entry is the ascending coefficient list
                ordered_json coeffs = ordered_json::array();
                lahbell::Poly entry = lahbell::lambda_r_lah(n, k, a.r);
                for (const auto& c : entry.coeffs())
                    coeffs.push_back(lahbell::rational_str(c));
                row.push_back(coeffs);
            } else {
                row.push_back(cell(n, k));
            }
        }
        rows.push_back(row);
    }
    rec["results"] = ordered_json{{"rows", rows}};
    rec["status"] = "value";
    std::cout << rec.dump(2) << "\n";
    return kExitPass;
}

int run_poly(const PolyArgs& a) {
    const bool is_lambda_family = a.family == "lb-lambda";
    const bool takes_r = a.family == "lb-r" || is_lambda_family;
    if (!takes_r && a.has_r) return usage_error("--r does not apply to family lb");
    if (a.has_lambda && !is_lambda_family)
        return unsupported("--lambda only applies to family lb-lambda");

    std::optional<ExactRat> x, lambda;
    if (a.has_x) x = lahbell::parse_rational(a.x_text);
    if (a.has_lambda) lambda = lahbell::parse_rational(a.lambda_text);

    if (is_lambda_family) {
        lahbell::BiPoly bp = lahbell::lambda_r_lah_bell_poly(a.n, a.r);
        if (x && lambda)
            std::cout << lahbell::rational_str(bp.eval(*x, *lambda)) << "\n";
        else if (x)
            std::cout << bp.at_x(*x).str() << "\n";
        else if (lambda)
            std::cout << bp.at_lambda(*lambda).str() << "\n";
        else
            std::cout << bp.str() << "\n";
        return kExitPass;
    }
    lahbell::Poly p = a.family == "lb" ? lahbell::lah_bell_poly(a.n)
                                       : lahbell::r_lah_bell_poly(a.n, a.r);
    if (x)
        std::cout << lahbell::rational_str(p.eval(*x)) << "\n";
    else
        std::cout << p.str() << "\n";
    return kExitPass;
}

int run_verify(const VerifyArgs& a) {
    if (a.inject_fault) lahbell::corrupt_lah_entry_for_testing(3, 2, lahbell::ExactInt(1));
    auto tasks = lahbell::build_suite(a.suite, a.bounds);
    auto results = lahbell::run_tasks(tasks, a.jobs);
    std::size_t passed = 0;
    for (const auto& res : results) {
        if (res.ok) {
            ++passed;
            std::cout << "PASS " << res.name << "\n";
        } else {
            std::cout << "FAIL " << res.name << ": " << res.detail << "\n";
        }
    }
    std::cout << "suite " << a.suite << ": " << passed << "/" << results.size()
              << " checks passed\n";
    return passed == results.size() ? kExitPass : kExitVerifyFail;
}

int run_oracle(const OracleArgs& a) {
    auto dist = lahbell::distribution_by_block_count(a.n);
    bool all_match = true;
    std::cout << "k,enumerated,closed_form,match\n";
    for (int k = a.n == 0 ? 0 : 1; k <= a.n; ++k) {
        lahbell::ExactInt enumerated(0);
        if (auto it = dist.find(k); it != dist.end()) enumerated = it->second;
        lahbell::ExactInt closed = lahbell::lah(a.n, k);
        bool match = enumerated == closed;
        all_match = all_match && match;
        std::cout << k << "," << enumerated.get_str() << "," << closed.get_str() << ","
                  << (match ? "yes" : "no") << "\n";
    }
    lahbell::ExactInt total = lahbell::count_all_ordered_partitions(a.n);
    ExactRat poly_total = lahbell::lah_bell_poly(a.n).eval(ExactRat(1));
    bool total_match = ExactRat(total) == poly_total;
    all_match = all_match && total_match;
    std::cout << "total," << total.get_str() << "," << lahbell::rational_str(poly_total)
              << "," << (total_match ? "yes" : "no") << "\n";
    return all_match ? kExitPass : kExitVerifyFail;
}

int run_dobinski(const DobinskiArgs& a) {
    ExactRat x = lahbell::parse_rational(a.x_text);
    std::optional<ExactRat> lambda;
    if (a.has_lambda) lambda = lahbell::parse_rational(a.lambda_text);
    lahbell::BigFloat eps = lahbell::BigFloat::from_string(a.eps_text, a.precision);
    auto res = lahbell::dobinski_eval(a.n, a.r, x, lambda, eps, a.precision);
    lahbell::BigFloat diff =
        (res.approx - lahbell::BigFloat::from_rational(res.exact_reference, a.precision))
            .abs();
    std::cout << "approx = " << res.approx.str(40) << "\n";
    std::cout << "tail_bound = " << res.tail_bound.str(10) << "\n";
    std::cout << "terms_used = " << res.terms_used << "\n";
    std::cout << "exact = " << lahbell::rational_str(res.exact_reference) << "\n";
    std::cout << "difference = " << diff.str(10) << "\n";
    lahbell::BigFloat allowance = lahbell::BigFloat::two_pow(-a.precision / 2, a.precision);
    return diff <= res.tail_bound + allowance ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Lah, r-Lah and lambda-analogue number triangles, Bell-type "
        "polynomials, identity verification suites, and high-precision "
        "series evaluation."};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table = app.add_subcommand(
        "table",
        "Export a number triangle. Formats: csv (n,k,value), json "
        "(machine-readable record), bfile (\"idx value\" lines with "
        "idx = n(n+1)/2 + k, rows in row-major order).");
    table->add_option("kind", table_args.kind, "Triangle kind")
        ->required()
        ->check(CLI::IsMember({"lah", "rlah", "lambda-rlah", "stirling2"}));
    table->add_option("n_max", table_args.n_max, "Largest row index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* table_r = table->add_option("--r", table_args.r, "Shift parameter (rlah kinds)")
                        ->check(CLI::NonNegativeNumber);
    table->add_option("--lambda", table_args.lambda_text,
                      "Rational lambda value, e.g. 1/2 (lambda-rlah only; omitted "
                      "lambda exports coefficient lists / polynomial text)");
    table->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "bfile"}));

    PolyArgs poly_args;
    auto* poly = app.add_subcommand(
        "poly",
        "Print a Bell-type polynomial (ascending degree, variables x and l) "
        "or evaluate it at exact rational points.");
    poly->add_option("family", poly_args.family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"lb", "lb-r", "lb-lambda"}));
    poly->add_option("n", poly_args.n, "Index n")->required()->check(CLI::NonNegativeNumber);
    auto* poly_r = poly->add_option("--r", poly_args.r, "Shift parameter (lb-r, lb-lambda)")
                       ->check(CLI::NonNegativeNumber);
    auto* poly_x = poly->add_option("--x", poly_args.x_text, "Evaluate at x = p/q");
    auto* poly_l =
        poly->add_option("--lambda", poly_args.lambda_text, "Evaluate at lambda = p/q");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "Run an identity-verification suite; exits 1 on any failure.");
    verify->add_option("suite", verify_args.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"defining", "spivey", "spivey-r", "spivey-lambda", "weyl",
                               "gf", "oracle", "all"}));
    verify->add_option("--n-max", verify_args.bounds.n_max, "Override n sweep limit");
    verify->add_option("--m-max", verify_args.bounds.m_max, "Override m sweep limit");
    verify->add_option("--r-max", verify_args.bounds.r_max, "Override r sweep limit");
    verify->add_option("--order", verify_args.bounds.order, "Override series order");
    verify->add_option("--jobs", verify_args.jobs, "Worker pool width")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--quick", verify_args.bounds.quick, "Reduced sweep bounds");
    verify->add_flag("--inject-fault", verify_args.inject_fault)->group("");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand(
        "oracle",
        "Enumerate ordered set partitions of [n] and compare each block "
        "count against the closed form.");
    oracle->add_option("n", oracle_args.n, "Set size (capped)")
        ->required()
        ->check(CLI::NonNegativeNumber);

    DobinskiArgs dob_args;
    auto* dob = app.add_subcommand(
        "dobinski",
        "Evaluate the exponentially weighted series for a Bell-type "
        "polynomial with a rigorous truncation bound.");
    dob->add_option("n", dob_args.n, "Index n")->required()->check(CLI::NonNegativeNumber);
    dob->add_option("--r", dob_args.r, "Shift parameter")->check(CLI::NonNegativeNumber);
    dob->add_option("--x", dob_args.x_text, "Evaluation point x = p/q > 0")->required();
    dob->add_option("--lambda", dob_args.lambda_text, "Positive rational lambda");
    dob->add_option("--eps", dob_args.eps_text, "Target tail size (decimal literal)");
    dob->add_option("--precision", dob_args.precision, "Working precision in bits (>= 128)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    table_args.has_r = table_r->count() > 0;
    table_args.has_lambda = table->count("--lambda") > 0;
    poly_args.has_r = poly_r->count() > 0;
    poly_args.has_x = poly_x->count() > 0;
    poly_args.has_lambda = poly_l->count() > 0;
    dob_args.has_lambda = dob->count("--lambda") > 0;

    try {
        if (table->parsed()) return run_table(table_args);
        if (poly->parsed()) return run_poly(poly_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
        if (dob->parsed()) return run_dobinski(dob_args);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
