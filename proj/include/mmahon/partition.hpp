#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmahon {

/// Integer partition stored as its positive parts in weakly decreasing order.
/// Trailing zeros are implicit: `Partition({2,1,0})` equals `Partition({2,1})`.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument if `parts` is not weakly decreasing or has
    /// negative entries. Zero parts are dropped.
    explicit Partition(std::vector<int> parts);

    /// Sorts arbitrary nonnegative integers into a partition (exponent partition).
    static Partition from_unsorted(std::vector<int> values);
    /// Parses "3,2,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// a ⊴ b in dominance order. Throws std::invalid_argument when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);
/// a ⊲ b: dominated and distinct.
inline bool dominance_less(const Partition& a, const Partition& b) {
    return a != b && dominance_leq(a, b);
}

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Partitions with at most `max_parts` parts, each at most `max_part`,
/// of any size (the empty partition included).
std::vector<Partition> partitions_in_box(int max_parts, int max_part);

/// k-tuple of partitions; for Kronecker keys all components share one size.
using Multipartition = std::vector<Partition>;

/// Componentwise dominance with at least one strict component.
bool dominance_strictly_above(const Multipartition& upper, const Multipartition& lower);

std::string to_string(const Multipartition& m);

}  // namespace mmahon
