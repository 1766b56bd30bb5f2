// Command-line front end: radial-basis expansions, moments, coefficient
// triangles, oracle verification, and benchmarks over the group ring of
// the free group F_N.
//
// Exit codes: 0 success, 2 argument error, 3 budget exceeded,
// 4 internal invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radial/algebra.hpp"
#include "radial/bench.hpp"
#include "radial/engine.hpp"
#include "radial/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;
constexpr int exit_internal = 4;

radial::Budget budget_from(const std::string& flag_value)
{
    if (!flag_value.empty())
        return radial::Budget::uniform(std::stoull(flag_value));
    if (const char* env = std::getenv("RADIAL_BUDGET"); env && *env)
        return radial::Budget::uniform(std::stoull(env));
    return {};
}

radial::RelationParams params_from(int N, const std::string& mode, const std::string& a,
                                   const std::string& b)
{
    radial::RelationMode m = radial::mode_from_name(mode);
    if (m == radial::RelationMode::custom) {
        if (a.empty() || b.empty())
            throw CLI::ValidationError("--mode custom requires --a and --b");
        return radial::RelationParams::custom(N, radial::Int(a), radial::Int(b));
    }
    return radial::RelationParams::with_mode(N, m);
}

void paper_text_banner(const radial::RelationParams& params, const std::string& format)
{
    if (params.mode == radial::RelationMode::paper_text && format == "plain")
        std::cerr << "note: paper-text mode reproduces the published coefficients "
                     "(b = N-1), which the oracle refutes; use --mode verified for "
                     "oracle-exact output\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations in the radial subalgebra of the free group factor"};
    app.require_subcommand(1);

    int N = 2;
    unsigned k = 0, n = 0, p = 0;
    std::string mode = "verified";
    std::string custom_a, custom_b;
    std::string format = "plain";
    std::string budget_flag;
    std::string out_path;
    bool value_only = false;
    std::vector<unsigned> grid_values;
    std::vector<int> bench_N = {2};
    std::vector<unsigned> bench_n = {1, 2, 3};
    std::uint64_t reps = 5;

    auto add_common = [&](CLI::App* cmd, bool with_kn) {
        cmd->add_option("--N", N, "number of free generators")->check(CLI::Range(1, 26));
        if (with_kn) {
            cmd->add_option("--k", k, "power of the generating operator x");
            cmd->add_option("--n", n, "radial basis index of X_n");
        }
        cmd->add_option("--mode", mode, "relation preset: paper-text, verified, custom")
            ->check(CLI::IsMember({"paper-text", "verified", "custom"}));
        cmd->add_option("--a", custom_a, "custom constant in X1*X1 = X2 + a*e");
        cmd->add_option("--b", custom_b, "custom coefficient in X1*Xm = X(m+1) + b*X(m-1)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        cmd->add_option("--budget", budget_flag,
                        "term budget override (also honors RADIAL_BUDGET)");
    };

    CLI::App* expand = app.add_subcommand("expand", "expand x^k X_n over the radial basis");
    add_common(expand, true);

    CLI::App* moment_cmd =
        app.add_subcommand("moment", "trace of x^k X_n: published closed form, engine, oracle");
    add_common(moment_cmd, true);
    moment_cmd->add_flag("--value-only", value_only, "print only the engine value");

    CLI::App* triangle = app.add_subcommand("triangle", "coefficient triangle rows of (r + c)^p");
    add_common(triangle, false);
    triangle->add_option("--p", p, "top exponent");

    CLI::App* verify =
        app.add_subcommand("verify", "engine-vs-oracle discrepancy report over a grid");
    add_common(verify, false);
    verify->add_option("--grid", grid_values,
                       "grid bounds: N_max [k_max [n_max]] (default 3 5 4)")
        ->expected(1, 3);
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* bench = app.add_subcommand("bench", "time oracle convolution vs radial recurrence");
    bench->add_option("--N", bench_N, "generator counts")->check(CLI::Range(1, 26));
    bench->add_option("--n", bench_n, "radial indices");
    bench->add_option("--reps", reps, "repetitions per measurement (>= 3)");
    bench->add_option("--budget", budget_flag, "term budget override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        radial::Budget budget = budget_from(budget_flag);

        if (expand->parsed()) {
            radial::RelationParams params = params_from(N, mode, custom_a, custom_b);
            paper_text_banner(params, format);
            radial::RadialVector v = radial::expand_xk_Xn(params, k, n);
            if (format == "json")
                std::cout << v.to_json().dump(2) << "\n";
            else
                std::cout << v.render_plain() << "\n";
        } else if (moment_cmd->parsed()) {
            radial::RelationParams params = params_from(N, mode, custom_a, custom_b);
            radial::Int engine = radial::moment(params, k, n);
            if (value_only) {
                std::cout << engine.str() << "\n";
                return exit_ok;
            }
            radial::Int paper = radial::paper_trace_closed_form(N, k, n);
            std::string oracle = "n/a";
            try {
                radial::AlgebraElement product = radial::mul(
                    radial::x_power(N, k, budget), radial::build_X(N, n, budget), budget);
                oracle = radial::trace(product).str();
            } catch (const radial::BudgetExceeded&) {
                // the oracle leg is best-effort; the engine value stands alone
            }
            if (format == "json") {
                nlohmann::ordered_json j{
                    {"paper", paper.str()}, {"engine", engine.str()}, {"oracle", oracle}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "paper=" << paper.str() << " engine=" << engine.str()
                          << " oracle=" << oracle << "\n";
            }
        } else if (triangle->parsed()) {
            radial::RelationParams params = params_from(N, mode, custom_a, custom_b);
            paper_text_banner(params, format);
            for (unsigned row = 0; row <= p; ++row) {
                radial::CoefficientSequence seq = radial::coefficient_sequence(row, params.b);
                std::string line;
                for (const auto& e : seq.entries)
                    line += (line.empty() ? "" : " ") + e.str();
                std::cout << line << "\n";
            }
        } else if (verify->parsed()) {
            radial::GridBounds bounds;
            if (!grid_values.empty())
                bounds.N_max = static_cast<int>(grid_values[0]);
            if (grid_values.size() > 1)
                bounds.k_max = grid_values[1];
            if (grid_values.size() > 2)
                bounds.n_max = grid_values[2];
            radial::DiscrepancyReport report = radial::discrepancy_report(bounds, budget);
            // verify defaults to the machine-readable report
            bool plain = verify->count("--format") > 0 && format == "plain";
            std::string rendered = plain ? report.to_text() : report.to_json().dump(2) + "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f)
                    throw std::runtime_error("cannot open output file: " + out_path);
                f << rendered;
            } else {
                std::cout << rendered;
            }
            return report.verified_mode_agrees() ? exit_ok : exit_internal;
        } else if (bench->parsed()) {
            std::cout << radial::emit_scaling_report(bench_N, bench_n, reps, budget);
        }
        return exit_ok;
    } catch (const radial::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
