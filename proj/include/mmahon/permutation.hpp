#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmahon/common.hpp"
#include "mmahon/partition.hpp"

namespace mmahon {

/// Subset of [n-1] = {1, ..., n-1}, stored as a bitmask (bit i <=> i in the set).
class DescentSet {
public:
    static constexpr int max_n = 64;

    DescentSet() = default;
    explicit DescentSet(int n) : n_(n) { check_n(n); }
    DescentSet(int n, std::span<const int> elements);
    DescentSet(int n, std::initializer_list<int> elements)
        : DescentSet(n, std::span<const int>(elements.begin(), elements.size())) {}
    /// Every subset of [n-1] corresponds to exactly one mask in [0, 2^(n-1)).
    static DescentSet from_mask(int n, std::uint64_t mask);
    /// Parses "{2,4}" (braces optional, "{}" is empty).
    static DescentSet parse(int n, std::string_view text);

    int n() const { return n_; }
    bool contains(int i) const { return i >= 1 && i < n_ && ((bits_ >> i) & 1u); }
    void insert(int i);
    std::vector<int> elements() const;
    int count() const;
    /// Mask with bit (i-1) for element i; dense index in [0, 2^(n-1)).
    std::uint64_t mask() const { return bits_ >> 1; }

    /// Sum of the elements (major index of anything with this descent set).
    int sum() const;
    /// λ_i = |D ∩ {i, ..., n}|; determines D and has |λ| = sum().
    Partition lambda() const;

    /// [n-1] minus this set.
    DescentSet complement() const;
    /// {i : n - i in D}.
    DescentSet reflect() const;

    std::string to_string() const;

    friend bool operator==(const DescentSet&, const DescentSet&) = default;
    friend auto operator<=>(const DescentSet& a, const DescentSet& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.mask() <=> b.mask();
    }

private:
    static void check_n(int n);

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// Every subset of [n-1], in increasing mask order.
std::vector<DescentSet> all_descent_sets(int n);

/// Permutation of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `word` is a bijection of [n], n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// w0 = n (n-1) ... 1.
    static Permutation longest(int n);
    /// "35241" for n <= 9, otherwise "10,2,...".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    std::span<const int> word() const { return word_; }
    /// Value at position i, 1-based.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
    std::vector<int> word_;
};

DescentSet descent_set(const Permutation& p);

struct PermutationStatistics {
    int maj = 0;
    int inv = 0;
};
PermutationStatistics statistics(const Permutation& p);

Partition lambda_of_permutation(const Permutation& p);

/// Apply p first, then q: compose(p, q)(i) = q(p(i)).
/// With this convention a tuple (σ1, ..., σk) has product σ1·σ2·...·σk
/// meaning "σ1 acts first".
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Left-to-right product of a non-empty tuple; all entries must share n.
Permutation product(std::span<const Permutation> perms);

/// Word reversed: the permutation σ∘w0 (so Des of it is Coasc(σ)).
Permutation reverse_word(const Permutation& p);
/// Values complemented i -> n+1-i: the permutation w0∘σ (Des of it is Asc(σ)).
Permutation complement_values(const Permutation& p);

/// S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Exactly the permutations whose descent set equals `d`, in lexicographic
/// order. Words are built block by block along the composition of n cut at d.
std::vector<Permutation> permutations_with_descent_set(int n, const DescentSet& d);

enum class MahonianStat { maj, inv };

/// Dense coefficient list of Σ_{σ ∈ S_n} q^{stat(σ)}; index = exponent.
std::vector<BigInt> mahonian_polynomial(int n, MahonianStat stat);
/// ∏_{i=1}^{n-1} (1 + q + ... + q^i).
std::vector<BigInt> q_factorial(int n);

}  // namespace mmahon
