// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Everything is exact integer arithmetic; there are no tolerances.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "radial/algebra.hpp"
#include "radial/bench.hpp"
#include "radial/engine.hpp"
#include "radial/verify.hpp"

using namespace radial;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "")
{
    std::cout << "[" << idx << "] " << (ok ? "PASS" : "FAIL") << " " << name;
    if (!ok && !detail.empty())
        std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    if (!ok)
        ++failures;
}

// Independent moment oracle: weighted closed walks on the 2N-regular tree,
// tracked by distance from the root (up-steps weight 2N-1 away from the
// root, 2N at it; down-steps weight 1).
Int tree_walk_moment(int N, unsigned k)
{
    std::vector<Int> dist{1};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Int> next(dist.size() + 1);
        for (std::size_t d = 0; d < dist.size(); ++d) {
            if (dist[d] == 0)
                continue;
            if (d == 0) {
                next[1] += dist[d] * (2 * N);
            } else {
                next[d + 1] += dist[d] * (2 * N - 1);
                next[d - 1] += dist[d];
            }
        }
        dist = std::move(next);
    }
    return dist[0];
}

Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

const Budget big_budget{5'000'000, 5'000'000};

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* cli = std::getenv("RADIAL_CLI");
    if (!cli)
        return {};
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Criteria 1 and 6 share the oracle chains: left chain x^k X_n for the
// embedding comparison, right chain X_n x^k for commutation.
void criteria_1_and_6()
{
    bool embed_ok = true, commute_ok = true;
    std::string detail1, detail6;
    for (int N = 1; N <= 3 && (embed_ok || commute_ok); ++N) {
        AlgebraElement x = build_X(N, 1, big_budget);
        for (unsigned n = 0; n <= 4; ++n) {
            AlgebraElement left = build_X(N, n, big_budget);
            AlgebraElement right = left;
            for (unsigned k = 0;; ++k) {
                RadialVector engine = expand_xk_Xn(RelationParams::verified(N), k, n);
                if (embed(engine, big_budget) != left && embed_ok) {
                    embed_ok = false;
                    detail1 = "mismatch at N=" + std::to_string(N) + " k=" + std::to_string(k) +
                              " n=" + std::to_string(n);
                }
                if (left != right && commute_ok) {
                    commute_ok = false;
                    detail6 = "x^k X_n != X_n x^k at N=" + std::to_string(N) +
                              " k=" + std::to_string(k) + " n=" + std::to_string(n);
                }
                if (k == 5)
                    break;
                left = mul(x, left, big_budget);
                right = mul(right, x, big_budget);
            }
        }
    }

    bool alternating_ok = true;
    std::string alt_detail;
    // frozen direct-trace values at N = 2, recomputed independently before
    // being fixed here
    const std::vector<std::pair<std::vector<AlternatingFactor>, Int>> frozen = {
        {{{1, 1}, {1, 1}}, 28}, {{{1, 2}, {1, 2}}, 72}, {{{2, 1}, {0, 3}}, 36},
        {{{2, 2}, {1, 1}, {1, 1}}, 1164},
    };
    std::size_t checked = 0;
    for (const auto& spec : default_alternating_specs()) {
        auto [direct, reduced] = trace_alternating(spec, 2, big_budget);
        ++checked;
        if (direct != reduced) {
            alternating_ok = false;
            alt_detail = "direct != reduced on spec " + std::to_string(checked);
        }
    }
    for (const auto& [spec, expected] : frozen)
        if (trace_alternating(spec, 2, big_budget).first != expected)
            alternating_ok = false;
    if (checked < 10)
        alternating_ok = false;

    report(1, "oracle equivalence of verified expansions (N<=3, k<=5, n<=4)", embed_ok, detail1);
    report(6, "commutation and alternating-product corollaries (" + std::to_string(checked) +
                  " specs)",
           commute_ok && alternating_ok, detail6 + alt_detail);
}

void criterion_2()
{
    bool ok = true;
    for (int N : {2, 3}) {
        Int m = N - 1;
        auto paper = RelationParams::paper_text(N);

        // x^3 = X3 + (2N + (N-1)) X1
        ok &= expand_power(paper, 3) ==
              RadialVector(paper, {0, Int(2 * N) + m, 0, 1});

        // x^2 X3 = X5 + 2(N-1) X3 + (N-1)^2 X1
        ok &= expand_xk_Xn(paper, 2, 3) == RadialVector(paper, {0, m * m, 0, 2 * m, 0, 1});

        // x^5 X3: the nested coefficient products of the two rows
        auto r3 = coefficient_sequence(3, m);
        auto r2 = coefficient_sequence(2, m);
        std::vector<Int> expected(9);
        expected[8] = r3.entry(0) * r2.entry(0);
        expected[6] = r3.entry(0) * r2.entry(1) + r3.entry(1) * r2.entry(0);
        expected[4] =
            r3.entry(0) * r2.entry(2) + r3.entry(1) * r2.entry(1) + r3.entry(2) * r2.entry(0);
        expected[2] = r3.entry(1) * r2.entry(2) + r3.entry(2) * r2.entry(1) + r3.entry(3);
        expected[0] = r3.entry(2) * r2.entry(2) + 2 * N * r3.entry(3);
        ok &= closed_form_expansion(N, 5, 3) == RadialVector(paper, std::move(expected));
    }
    report(2, "paper-text reproduction of the printed expansions (N=2,3)", ok);
}

void criterion_3()
{
    bool ok = true;
    std::string detail;
    for (int N = 1; N <= 3; ++N) {
        auto verified = RelationParams::verified(N);
        ok &= moment(verified, 2, 0) == 2 * N;
        ok &= trace(x_power(N, 2, big_budget)) == 2 * N;

        for (unsigned k = 1; k <= 11; k += 2) {
            ok &= moment(verified, k, 0) == 0;
            ok &= moment(RelationParams::paper_text(N), k, 0) == 0;
            ok &= tree_walk_moment(N, k) == 0;
            if (word_count(N, k) <= big_budget.max_words)
                ok &= trace(x_power(N, k, big_budget)) == 0;
        }

        Int fourth = Int(2 * N) * (4 * N - 1);
        ok &= moment(verified, 4, 0) == fourth;
        ok &= trace(x_power(N, 4, big_budget)) == fourth;
        ok &= tree_walk_moment(N, 4) == fourth;
    }
    ok &= moment(RelationParams::verified(2), 6, 0) == 232;
    ok &= trace(x_power(2, 6, big_budget)) == 232;
    ok &= tree_walk_moment(2, 6) == 232;
    report(3, "moment table of x (engine = oracle = weighted tree walks)", ok, detail);
}

void criteria_4_and_5(const DiscrepancyReport& rep)
{
    bool vanish_ok = !rep.records.empty();
    for (const auto& r : rep.records)
        if (r.n > r.k && (r.trace_oracle != 0 || r.trace_engine != 0 || r.trace_paper != 0))
            vanish_ok = false;
    report(4, "trace(x^k X_n) = 0 above the diagonal, both modes and oracle", vanish_ok);

    bool adjudicated = false, witness_ok = false, diag_ok = true;
    for (const auto& c : rep.claims) {
        if (c.claim_id != "diagonal-trace-closed-form")
            continue;
        adjudicated = c.status == "REFUTED";
        witness_ok = c.witness.contains("N") && c.witness.contains("paper") &&
                     c.witness.contains("oracle") && c.witness["paper"] != c.witness["oracle"];
    }
    for (const auto& r : rep.records) {
        if (r.mode != RelationMode::verified || r.k != r.n || r.n > 4)
            continue;
        Int expected = r.n == 0 ? Int(1) : Int(2 * r.N) * int_pow(2 * r.N - 1, r.n - 1);
        if (r.trace_oracle != expected)
            diag_ok = false;
    }
    report(5, "diagonal trace claim refuted with witness; oracle value 2N(2N-1)^(n-1)",
           adjudicated && witness_ok && diag_ok);
}

void criterion_7()
{
    bool ok = true;

    // parity of expansion coefficients, k <= 12
    for (int N : {1, 2, 3})
        for (RelationMode mode : {RelationMode::paper_text, RelationMode::verified}) {
            auto params = RelationParams::with_mode(N, mode);
            for (unsigned k = 0; k <= 12; ++k) {
                RadialVector v = expand_power(params, k);
                for (std::size_t j = 0; j < v.coeffs().size(); ++j)
                    if ((j % 2) != (k % 2) && v.coeff(j) != 0)
                        ok = false;
            }
        }

    // mass conservation in verified mode, k + n <= 8
    for (int N = 1; N <= 3; ++N) {
        auto params = RelationParams::verified(N);
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned k = 0; k + n <= 8; ++k) {
                RadialVector v = expand_xk_Xn(params, k, n);
                Int mass = 0;
                for (std::size_t j = 0; j < v.coeffs().size(); ++j)
                    mass += v.coeff(j) * word_count(N, static_cast<unsigned>(j));
                if (mass != int_pow(Int(2 * N), k) * word_count(N, n))
                    ok = false;
            }
    }

    // trace property and positivity on random small elements
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> gen_dist(1, 2);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::uniform_int_distribution<unsigned> len_dist(0, 3);
    std::uniform_int_distribution<int> terms_dist(0, 12);
    auto random_element = [&] {
        AlgebraElement p(2);
        int terms = terms_dist(rng);
        for (int t = 0; t < terms; ++t) {
            ReducedWord w;
            unsigned len = len_dist(rng);
            for (unsigned i = 0; i < len; ++i)
                w = concat(w, ReducedWord::generator(gen_dist(rng), sign_dist(rng) ? 1 : -1));
            p.add_term(w, coeff_dist(rng));
        }
        return p;
    };
    for (int i = 0; i < 120; ++i) {
        AlgebraElement p = random_element();
        AlgebraElement q = random_element();
        if (trace(mul(p, q)) != trace(mul(q, p)))
            ok = false;
        Int norm = trace(mul(adjoint(p), p));
        if (norm < 0 || (norm == 0) != p.is_zero())
            ok = false;
    }

    // triangle rows equal the binomial closed form, p <= 12
    for (Int c : {Int(1), Int(2), Int(3), Int(5)})
        for (unsigned p = 0; p <= 12; ++p) {
            auto seq = coefficient_sequence(p, c);
            for (unsigned i = 0; i <= p; ++i)
                if (seq.entry(i) != binomial(p, i) * int_pow(c, i))
                    ok = false;
        }

    report(7, "property suites: parity, mass conservation, trace/positivity, triangle", ok);
}

void criterion_8()
{
    auto a = run_cli("verify --grid 2 4 3 --format json");
    auto b = run_cli("verify --grid 2 4 3 --format json");
    bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    report(8, "determinism: byte-identical verify reports", ok);
}

} // namespace

int main()
{
    criteria_1_and_6();
    criterion_2();
    criterion_3();

    DiscrepancyReport rep = discrepancy_report(GridBounds{3, 5, 4}, big_budget);
    criteria_4_and_5(rep);
    criterion_7();
    criterion_8();

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
