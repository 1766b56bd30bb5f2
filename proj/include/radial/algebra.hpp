#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "radial/bigint.hpp"
#include "radial/budget.hpp"
#include "radial/word.hpp"

namespace radial {

/// An element of the integral group ring Z[F_N]: a finitely supported map
/// from reduced words to integers. This is the brute-force oracle
/// representation; everything recurrence-based is checked against it.
///
/// Invariants: no stored coefficient is zero, every word fits in N
/// generators. Elements are immutable once built (the mutating helpers are
/// only used during construction).
class AlgebraElement {
public:
    using TermMap = std::map<ReducedWord, Int, WordOrder>;

    explicit AlgebraElement(int N) : N_(N) { detail::check_rank(N); }

    static AlgebraElement zero(int N) { return AlgebraElement(N); }

    static AlgebraElement identity(int N)
    {
        AlgebraElement e(N);
        e.terms_[ReducedWord::identity()] = 1;
        return e;
    }

    static AlgebraElement from_word(int N, const ReducedWord& w, Int coeff = 1)
    {
        AlgebraElement p(N);
        if (w.max_generator_index() > N)
            throw std::invalid_argument("word uses a generator beyond rank N");
        if (coeff != 0)
            p.terms_[w] = std::move(coeff);
        return p;
    }

    int rank() const { return N_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const ReducedWord& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const ReducedWord& w, const Int& c)
    {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    /// {"N": int, "terms": [{"word": str, "coeff": decimal-string}...]}
    /// sorted by (length, lexicographic word).
    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["N"] = N_;
        auto& arr = j["terms"] = nlohmann::ordered_json::array();
        for (const auto& [w, c] : terms_) {
            nlohmann::ordered_json t;
            t["word"] = w.str();
            t["coeff"] = c.str();
            arr.push_back(std::move(t));
        }
        return j;
    }

private:
    int N_;
    TermMap terms_;
};

namespace detail {
inline void check_same_rank(const AlgebraElement& p, const AlgebraElement& q)
{
    if (p.rank() != q.rank())
        throw std::invalid_argument("group-ring elements have mismatched rank N: " +
                                    std::to_string(p.rank()) + " vs " + std::to_string(q.rank()));
}
} // namespace detail

inline AlgebraElement add(const AlgebraElement& p, const AlgebraElement& q)
{
    detail::check_same_rank(p, q);
    AlgebraElement r = p;
    for (const auto& [w, c] : q.terms())
        r.add_term(w, c);
    return r;
}

inline AlgebraElement scale(const AlgebraElement& p, const Int& s)
{
    AlgebraElement r(p.rank());
    if (s == 0)
        return r;
    for (const auto& [w, c] : p.terms())
        r.add_term(w, c * s);
    return r;
}

/// Full convolution product: concatenate-and-reduce every pair of words,
/// accumulating coefficient products. The number of accumulation events is
/// exactly term_count(p) * term_count(q), checked against the budget.
inline AlgebraElement mul(const AlgebraElement& p, const AlgebraElement& q,
                          const Budget& budget = {})
{
    detail::check_same_rank(p, q);
    std::uint64_t events =
        static_cast<std::uint64_t>(p.term_count()) * static_cast<std::uint64_t>(q.term_count());
    if (events > budget.max_products)
        throw BudgetExceeded("group-ring product needs " + std::to_string(events) +
                                 " accumulation events, exceeding the product budget",
                             budget.max_products);

    AlgebraElement r(p.rank());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms())
            r.add_term(concat(u, v), cu * cv);
    return r;
}

/// Coefficient of w in the result is the coefficient of w^-1 in p.
/// Integer coefficients are self-conjugate, so this is the ring *-operation.
inline AlgebraElement adjoint(const AlgebraElement& p)
{
    AlgebraElement r(p.rank());
    for (const auto& [w, c] : p.terms())
        r.add_term(w.inverse(), c);
    return r;
}

/// Canonical trace: the coefficient of the identity word.
inline Int trace(const AlgebraElement& p)
{
    return p.coeff(ReducedWord::identity());
}

/// X_n = sum of all reduced words of length n; X_0 = e, X_1 = x.
inline AlgebraElement build_X(int N, unsigned n, const Budget& budget = {})
{
    AlgebraElement r(N);
    for (const auto& w : enumerate_words(N, n, budget))
        r.add_term(w, 1);
    return r;
}

/// x^k computed wholly in the group ring by repeated convolution.
inline AlgebraElement x_power(int N, unsigned k, const Budget& budget = {})
{
    AlgebraElement r = AlgebraElement::identity(N);
    if (k == 0)
        return r;
    AlgebraElement x = build_X(N, 1, budget);
    for (unsigned i = 0; i < k; ++i)
        r = mul(x, r, budget);
    return r;
}

inline AlgebraElement operator+(const AlgebraElement& p, const AlgebraElement& q)
{
    return add(p, q);
}

inline AlgebraElement operator-(const AlgebraElement& p, const AlgebraElement& q)
{
    return add(p, scale(q, -1));
}

inline AlgebraElement operator*(const AlgebraElement& p, const AlgebraElement& q)
{
    return mul(p, q);
}

} // namespace radial
