#pragma once

// Verification suites shared by the CLI and the acceptance driver.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmahon/common.hpp"

namespace mmahon::suites {

struct SuiteResult {
    bool passed = true;
    std::vector<std::string> lines;  // one "PASS ..." / "FAIL ..." per identity checked
    nlohmann::ordered_json json = nlohmann::ordered_json::object();

    void record(bool ok, const std::string& what);
};

struct SuiteOptions {
    int n = 0;
    int k = 0;
    std::uint32_t cap = 2;
    std::size_t samples = 0;  // 0: every profile
    std::uint64_t seed = 0;
    Budget budget;
};

/// maj and inv distributions equal the q-factorial product for every m ≤ n.
SuiteResult macmahon(const SuiteOptions& o);
/// Windowed Hilbert series identity.
SuiteResult ggen(const SuiteOptions& o);
/// k-partite partition count per multidegree.
SuiteResult parpar(const SuiteOptions& o);
SuiteResult sym(const SuiteOptions& o);
SuiteResult dcac(const SuiteOptions& o);
/// Recursion against characters on every canonical key with k shapes.
SuiteResult oracle(const SuiteOptions& o);
/// Robinson–Schensted shape, descent and bijectivity checks over S_n.
SuiteResult rs(const SuiteOptions& o);
/// Refined distribution from tuples against the Kronecker-weighted sum.
SuiteResult main_theorem(const SuiteOptions& o);
/// Uniqueness and minimality of the canonical tableau for every shape of n.
SuiteResult uiop(const SuiteOptions& o);
/// d(λ′, μ′, ν) = d(λ, μ, ν) for every triple.
SuiteResult conj(const SuiteOptions& o);
/// k = 1 and k = 2 deltas, and the dimension identity of tensor squares.
SuiteResult classical(const SuiteOptions& o);

}  // namespace mmahon::suites
