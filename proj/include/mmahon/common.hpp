#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mmahon {

/// Exact integer type for every count and coefficient in the library.
using BigInt = mpz_class;

/// Thrown when an enumeration would exceed the caller's step budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double requested, std::uint64_t budget)
        : std::runtime_error(what + ": needs ~" + std::to_string(requested) +
                             " steps, budget is " + std::to_string(budget)),
          requested_(requested), budget_(budget) {}

    double requested() const { return requested_; }
    std::uint64_t budget() const { return budget_; }

private:
    double requested_;
    std::uint64_t budget_;
};

/// Upper bound on the number of enumeration steps a single call may take.
struct Budget {
    std::uint64_t steps = 100'000'000;

    void check(double requested, const std::string& what) const {
        if (requested > static_cast<double>(steps))
            throw BudgetExceeded(what, requested, steps);
    }
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace mmahon
