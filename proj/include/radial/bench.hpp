#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radial/algebra.hpp"
#include "radial/engine.hpp"
#include "radial/verify.hpp"

namespace radial {

/// One timed workload. Times come from a single-threaded loop with one
/// discarded warm-up run; a result is only produced after the strategy's
/// output has been checked for correctness.
struct BenchResult {
    std::string workload;
    int N = 0;
    unsigned k = 0;
    unsigned n = 0;
    std::uint64_t reps = 0;
    double mean_ns = 0.0;
    double stddev_ns = 0.0;
    std::uint64_t terms_in = 0;
    std::uint64_t terms_out = 0;
    std::uint64_t peak_terms = 0;
};

namespace detail {

template <class F>
std::pair<double, double> time_loop(std::uint64_t reps, F&& body)
{
    body(); // warm-up, excluded
    std::vector<double> samples;
    samples.reserve(reps);
    for (std::uint64_t i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        samples.push_back(ns > 0.0 ? ns : 1.0);
    }
    double mean = 0.0;
    for (double s : samples)
        mean += s;
    mean /= static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples)
        var += (s - mean) * (s - mean);
    var /= static_cast<double>(samples.size());
    return {mean, std::sqrt(var)};
}

inline void check_reps(std::uint64_t reps)
{
    if (reps < 3)
        throw std::invalid_argument("benchmark needs at least 3 repetitions, got " +
                                    std::to_string(reps));
}

} // namespace detail

/// Times mul(x^k, X_n) in the group ring against expand_xk_Xn in the
/// recurrence engine. Both results are first asserted identical (engine
/// projected against the oracle); a disagreement throws instead of timing.
inline std::pair<BenchResult, BenchResult> bench_oracle_vs_engine(int N, unsigned k, unsigned n,
                                                                  std::uint64_t reps,
                                                                  const Budget& budget = {})
{
    detail::check_reps(reps);

    AlgebraElement xk = x_power(N, k, budget);
    AlgebraElement Xn = build_X(N, n, budget);
    RelationParams params = RelationParams::verified(N);

    AlgebraElement product = mul(xk, Xn, budget);
    RadialProjection proj = project_radial(product);
    RadialVector expansion = expand_xk_Xn(params, k, n);
    if (!proj.structural_ok)
        throw std::logic_error("oracle product is not radial: " + proj.issue);
    for (std::size_t j = 0; j < std::max(proj.coeffs.size(), expansion.coeffs().size()); ++j) {
        Int oc = j < proj.coeffs.size() ? proj.coeffs[j] : Int(0);
        if (oc != expansion.coeff(j))
            throw std::logic_error("engine and oracle disagree; refusing to time");
    }

    BenchResult oracle;
    oracle.workload = "oracle-convolution";
    oracle.N = N;
    oracle.k = k;
    oracle.n = n;
    oracle.reps = reps;
    oracle.terms_in = Xn.term_count();
    oracle.terms_out = product.term_count();
    oracle.peak_terms = product.term_count();
    std::tie(oracle.mean_ns, oracle.stddev_ns) =
        detail::time_loop(reps, [&] { mul(xk, Xn, budget); });

    BenchResult engine;
    engine.workload = "radial-recurrence";
    engine.N = N;
    engine.k = k;
    engine.n = n;
    engine.reps = reps;
    engine.terms_in = Xn.term_count();
    engine.terms_out = expansion.coeffs().size();
    engine.peak_terms = expansion.coeffs().size();
    std::tie(engine.mean_ns, engine.stddev_ns) =
        detail::time_loop(reps, [&] { expand_xk_Xn(params, k, n); });

    return {std::move(oracle), std::move(engine)};
}

inline std::string scaling_csv_header()
{
    return "N,n,strategy,mean_ns,stddev_ns,terms_in,terms_out";
}

/// CSV over the (N, n) grid, one row per strategy, timing x * X_n.
/// Deterministic row order: N outer, n inner, oracle before engine.
inline std::string emit_scaling_report(const std::vector<int>& N_list,
                                       const std::vector<unsigned>& n_list, std::uint64_t reps,
                                       const Budget& budget = {})
{
    detail::check_reps(reps);
    std::string csv = scaling_csv_header() + "\n";
    for (int N : N_list) {
        for (unsigned n : n_list) {
            auto [oracle, engine] = bench_oracle_vs_engine(N, 1, n, reps, budget);
            for (const BenchResult* r : {&oracle, &engine}) {
                csv += std::to_string(r->N) + "," + std::to_string(r->n) + "," + r->workload + "," +
                       std::to_string(static_cast<std::uint64_t>(r->mean_ns)) + "," +
                       std::to_string(static_cast<std::uint64_t>(r->stddev_ns)) + "," +
                       std::to_string(r->terms_in) + "," + std::to_string(r->terms_out) + "\n";
            }
        }
    }
    return csv;
}

} // namespace radial
