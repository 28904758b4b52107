#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmahon/common.hpp"
#include "mmahon/partition.hpp"
#include "mmahon/permutation.hpp"

namespace mmahon {

// ------------------------------------------------------------------ characters

/// Irreducible character value χ^irrep at the class of the given cycle type,
/// by the Murnaghan–Nakayama rule on beta-sets. Throws std::invalid_argument
/// when the two partitions have different sizes.
std::int64_t character_value(const Partition& irrep, const Partition& cycle_type);

/// n! / z_ρ, the number of permutations with cycle type ρ.
BigInt class_size(const Partition& cycle_type);

/// Full character table of S_n. Rows and columns are indexed by
/// partitions_of(n) order.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }
    std::int64_t value(const Partition& irrep, const Partition& cycle_type) const;
    const BigInt& class_size(const Partition& cycle_type) const;

private:
    std::size_t index_of(const Partition& p) const;

    int n_;
    std::vector<Partition> labels_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::vector<std::int64_t>> values_;
    std::vector<BigInt> class_sizes_;
};

/// Shared, lazily built table for S_n.
const CharacterTable& character_table(int n);

/// (1/n!) Σ_ρ |C_ρ| ∏_i χ^{μ(i)}(ρ). Throws std::logic_error if the sum is not
/// a nonnegative multiple of n! (which would mean a broken character table).
BigInt kronecker_character(const Multipartition& key);

// ------------------------------------------------------------------ cache table

enum class Provenance { recursion, character };
std::string to_string(Provenance p);

/// Sorts the shapes into decreasing order; d is symmetric in its arguments.
Multipartition canonical_key(Multipartition key);

/// Raised when a persisted table fails validation.
class CacheError : public std::runtime_error {
public:
    CacheError(std::size_t entry, const std::string& what)
        : std::runtime_error(entry == npos ? what : "entry " + std::to_string(entry) + ": " + what),
          entry_(entry) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t entry() const { return entry_; }

private:
    std::size_t entry_;
};

/// Memo table of Kronecker coefficients for one n, keyed by canonical keys.
class KroneckerTable {
public:
    struct Entry {
        BigInt value;
        Provenance provenance;
    };

    KroneckerTable() = default;
    explicit KroneckerTable(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    const std::map<Multipartition, Entry>& entries() const { return entries_; }

    std::optional<Entry> find(const Multipartition& key) const;
    /// Inserts or overwrites. The key is canonicalized and validated.
    void insert(const Multipartition& key, const BigInt& value, Provenance provenance);

    /// {"n":…, "entries":[{"shapes":[[3,1],…], "value":"1", "provenance":"recursion"}…]}
    nlohmann::ordered_json to_json() const;
    /// Validates every entry; throws CacheError naming the offending index.
    static KroneckerTable from_json(const nlohmann::ordered_json& j);

    friend bool operator==(const KroneckerTable& a, const KroneckerTable& b);

private:
    void validate_key(const Multipartition& key) const;

    int n_ = 0;
    std::map<Multipartition, Entry> entries_;
};

KroneckerTable load_table(const std::string& path);
void save_table(const KroneckerTable& table, const std::string& path);

// ------------------------------------------------------------------ recursion

/// Kronecker coefficients from descent-class counts alone:
///
///   d(μ) = #{product-one tuples with Des(σi) = Des(T_μ(i))}
///          − Σ d(ν) over tableau tuples with the same descent sets whose
///            shape tuple ν strictly dominates μ componentwise.
///
/// Every recursive call moves strictly up the componentwise dominance order,
/// so memoized evaluation terminates. Not safe for concurrent writers.
class KroneckerRecursion {
public:
    explicit KroneckerRecursion(int n, Budget budget = {});
    KroneckerRecursion(KroneckerTable table, Budget budget = {});

    int n() const { return n_; }
    BigInt value(const Multipartition& key);
    /// Evaluates every canonical key with k shapes, largest shapes first.
    void fill_all(int k);

    const KroneckerTable& table() const { return table_; }
    std::size_t descent_count_evaluations() const { return descent_counts_.size(); }

private:
    struct ShapeCount {
        Partition shape;
        std::uint64_t tableaux;
    };
    const std::vector<ShapeCount>& shapes_with_descents(const DescentSet& d);
    BigInt descent_count(const std::vector<DescentSet>& profile);

    int n_;
    Budget budget_;
    KroneckerTable table_;
    std::map<DescentSet, std::vector<ShapeCount>> shapes_by_descents_;
    std::map<std::vector<DescentSet>, BigInt> descent_counts_;
    std::set<Multipartition> in_progress_;
};

/// ρ ↦ d(a, b, ρ) for every ρ with a nonzero coefficient.
std::map<Partition, BigInt> tensor_decompose(const Partition& a, const Partition& b,
                                             KroneckerRecursion& engine);

/// All canonical keys of k partitions of n (multisets), largest first.
std::vector<Multipartition> canonical_keys(int n, int k);
/// All ordered k-tuples of partitions of n.
std::vector<Multipartition> all_keys(int n, int k);

}  // namespace mmahon
