#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radial {

/// Size limits for the brute-force group-ring computations. Enumeration
/// and convolution abort with BudgetExceeded instead of eating the machine.
struct Budget {
    std::uint64_t max_words = 1'000'000;    // words per enumeration call
    std::uint64_t max_products = 5'000'000; // accumulation events per multiplication

    static Budget uniform(std::uint64_t cap) { return Budget{cap, cap}; }
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t limit)
        : std::runtime_error(what + " (limit: " + std::to_string(limit) + ")"), limit_(limit)
    {
    }

    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

} // namespace radial
