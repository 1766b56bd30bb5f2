#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radial/bigint.hpp"
#include "radial/budget.hpp"

namespace radial {

/// Serialization uses one latin letter per generator: a..z, inverses A..Z.
inline constexpr int max_generators = 26;

/// A generator g_i of the free group, 1-based index.
struct Generator {
    int index;

    friend bool operator==(Generator, Generator) = default;
};

/// A generator or its inverse.
struct Letter {
    Generator gen;
    int sign; // +1 or -1

    friend bool operator==(Letter, Letter) = default;
};

namespace detail {

// Packed letter code: 'a'+i-1 for g_i, 'A'+i-1 for g_i^-1.
inline char pack_letter(int index, int sign)
{
    return static_cast<char>((sign > 0 ? 'a' : 'A') + index - 1);
}

inline Letter unpack_letter(char c)
{
    if (c >= 'a' && c <= 'z')
        return {Generator{c - 'a' + 1}, +1};
    return {Generator{c - 'A' + 1}, -1};
}

inline bool cancels(char x, char y)
{
    return (x ^ 0x20) == y; // same letter, opposite case
}

// Canonical letter order: g1 < g1^-1 < g2 < g2^-1 < ...
inline int letter_rank(char c)
{
    return ((c | 0x20) - 'a') * 2 + (c < 'a' ? 1 : 0);
}

inline void check_generator(int N, int index)
{
    if (index < 1 || index > N)
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " out of range [1, " + std::to_string(N) + "]");
}

inline void check_rank(int N)
{
    if (N < 1 || N > max_generators)
        throw std::invalid_argument("number of generators must be in [1, " +
                                    std::to_string(max_generators) + "], got " +
                                    std::to_string(N));
}

} // namespace detail

/// A freely reduced word over the generators of a free group. The empty
/// word is the identity e. Immutable after construction; every factory
/// reduces eagerly, so adjacent cancelling pairs never survive.
class ReducedWord {
public:
    ReducedWord() = default;

    static ReducedWord identity() { return {}; }

    static ReducedWord generator(int index, int sign = +1)
    {
        detail::check_generator(max_generators, index);
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
        ReducedWord w;
        w.letters_.push_back(detail::pack_letter(index, sign));
        return w;
    }

    /// Parses the serialization format: "1" is the identity, otherwise a
    /// string of latin letters (uppercase = inverse). Unreduced input is
    /// reduced, so parse(str(w)) == w and parsing is idempotent.
    static ReducedWord parse(std::string_view s)
    {
        if (s == "1")
            return {};
        ReducedWord w;
        for (char c : s) {
            if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')))
                throw std::invalid_argument("invalid word character: '" + std::string(1, c) + "'");
            w.push_reduced(c);
        }
        return w;
    }

    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    Letter letter(std::size_t i) const { return detail::unpack_letter(letters_[i]); }

    std::string str() const { return letters_.empty() ? "1" : letters_; }

    /// Letters reversed with signs flipped; w * inverse(w) == e.
    ReducedWord inverse() const
    {
        ReducedWord r;
        r.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.letters_.push_back(static_cast<char>(*it ^ 0x20));
        return r;
    }

    /// Free reduction of the concatenation u v.
    friend ReducedWord concat(const ReducedWord& u, const ReducedWord& v)
    {
        ReducedWord r = u;
        for (char c : v.letters_)
            r.push_reduced(c);
        return r;
    }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

    /// Canonical order: by length, then lexicographic in the letter order
    /// g1 < g1^-1 < g2 < ... Deterministic map iteration depends on this.
    friend std::strong_ordering canonical_order(const ReducedWord& a, const ReducedWord& b)
    {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
            return c;
        for (std::size_t i = 0; i < a.letters_.size(); ++i)
            if (auto c = detail::letter_rank(a.letters_[i]) <=> detail::letter_rank(b.letters_[i]);
                c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    int max_generator_index() const
    {
        int m = 0;
        for (char c : letters_)
            m = std::max(m, (c | 0x20) - 'a' + 1);
        return m;
    }

private:
    void push_reduced(char c)
    {
        if (!letters_.empty() && detail::cancels(letters_.back(), c))
            letters_.pop_back();
        else
            letters_.push_back(c);
    }

    std::string letters_;
};

struct WordOrder {
    bool operator()(const ReducedWord& a, const ReducedWord& b) const
    {
        return canonical_order(a, b) == std::strong_ordering::less;
    }
};

/// Number of reduced words of length n over N generators:
/// 1 for n = 0, else 2N(2N-1)^(n-1).
inline Int word_count(int N, unsigned n)
{
    detail::check_rank(N);
    if (n == 0)
        return 1;
    return Int(2 * N) * int_pow(2 * N - 1, n - 1);
}

/// All reduced words of length n over N generators, in canonical order.
/// Throws BudgetExceeded when the count would pass budget.max_words.
inline std::vector<ReducedWord> enumerate_words(int N, unsigned n, const Budget& budget = {})
{
    detail::check_rank(N);
    if (word_count(N, n) > budget.max_words)
        throw BudgetExceeded("enumerating " + word_count(N, n).str() + " words of length " +
                                 std::to_string(n) + " exceeds the word budget",
                             budget.max_words);

    std::vector<ReducedWord> level{ReducedWord::identity()};
    for (unsigned step = 0; step < n; ++step) {
        std::vector<ReducedWord> next;
        next.reserve(level.size() * 2 * N);
        for (const auto& w : level) {
            for (int i = 1; i <= N; ++i) {
                for (int sign : {+1, -1}) {
                    // appending the inverse of the last letter would cancel
                    if (w.length() > 0) {
                        Letter last = w.letter(w.length() - 1);
                        if (last.gen.index == i && last.sign == -sign)
                            continue;
                    }
                    next.push_back(concat(w, ReducedWord::generator(i, sign)));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace radial
