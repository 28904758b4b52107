#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmahon/common.hpp"
#include "mmahon/permutation.hpp"

namespace mmahon {

enum class StatKind { des, codes, asc, coasc };

std::string to_string(StatKind kind);

/// Codes reflects i -> n-i, Asc complements in [n-1], Coasc does both.
/// Each transform is an involution.
DescentSet transform(const DescentSet& d, StatKind kind);

/// Statistic of a permutation: transform(Des(σ), kind).
DescentSet stat(const Permutation& p, StatKind kind);

/// |{(σ1..σk) product-one : D_i = kinds[i](σ_{perm[i]}) for all i}|,
/// with `perm` a 0-based permutation of {0..k-1}. Enumerates directly.
BigInt count_mixed(int n, std::span<const DescentSet> profile, std::span<const StatKind> kinds,
                   std::span<const int> perm, const Budget& budget = {});

/// Number of product-one k-tuples per descent profile, indexed by the
/// concatenated descent masks. Built by one pass over all (n!)^(k-1) tuples.
class DescentHistogram {
public:
    DescentHistogram(int n, int k, const Budget& budget = {});

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t profile_count() const { return counts_.size(); }
    BigInt count(std::span<const DescentSet> profile) const;
    /// Profile with the given dense index (inverse of the internal indexing).
    std::vector<DescentSet> profile(std::uint64_t index) const;

private:
    std::uint64_t index_of(std::span<const DescentSet> profile) const;

    int n_, k_;
    std::vector<std::uint64_t> counts_;
};

/// Deterministic profile selection for sweeps: all profiles when
/// `samples` is 0 or covers everything, otherwise `samples` distinct profiles
/// drawn with the seed.
std::vector<std::vector<DescentSet>> select_profiles(int n, int k, std::size_t samples, std::uint64_t seed);

struct SymmetryReport {
    bool passed = true;
    std::size_t profiles_checked = 0;
    std::size_t counts_compared = 0;
    std::vector<std::string> failures;
    nlohmann::ordered_json details = nlohmann::ordered_json::array();

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// For every selected profile and every π in S_k, the count with D permuted
/// by π equals the unpermuted count.
SymmetryReport verify_sym(int n, int k, std::size_t samples = 0, std::uint64_t seed = 0,
                          const Budget& budget = {});

/// For every selected profile: C(i1,i2,i3;π) over all 0 ≤ i1 ≤ i2 ≤ i3 ≤ k and
/// π in S_k takes one value for even i2 and one for odd i2. Also checks that
/// flipping any subset of coordinates from Des to Codes (or Asc to Coasc)
/// leaves the count unchanged.
SymmetryReport verify_dcac(int n, int k, std::size_t samples = 0, std::uint64_t seed = 0,
                           const Budget& budget = {});

/// The kind assigned to coordinate i (1-based) by the thresholds i1 ≤ i2 ≤ i3.
StatKind dcac_kind(int i, int i1, int i2, int i3);

}  // namespace mmahon
