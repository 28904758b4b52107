#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmahon/common.hpp"
#include "mmahon/partition.hpp"
#include "mmahon/permutation.hpp"

namespace mmahon {

/// Standard Young tableau in English notation: row 0 on top.
class StandardTableau {
public:
    StandardTableau() = default;
    /// Throws std::invalid_argument unless rows/columns increase, the shape
    /// is a partition and the entries are exactly 1..n.
    explicit StandardTableau(std::vector<std::vector<int>> rows);
    /// Parses "[[1,3,5],[2,6],[4],[7]]".
    static StandardTableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    const Partition& shape() const { return shape_; }
    /// Row index (0-based) holding entry v.
    int row_of(int v) const { return row_of_[static_cast<std::size_t>(v - 1)]; }

    std::string to_string() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
    Partition shape_;
};

struct TableauDescentData {
    DescentSet descents;
    Partition lambda;
};

/// i is a descent when i+1 sits in a strictly lower row.
DescentSet descent_set(const StandardTableau& t);
TableauDescentData descent_data(const StandardTableau& t);

/// All standard tableaux of the given shape, each once, in a fixed order
/// (entries 1..n placed into the topmost available corner first).
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

/// Row-by-row filling; the unique tableau of its shape whose descents are the
/// partial row sums.
StandardTableau canonical_tableau(const Partition& shape);

/// All standard tableaux with n boxes (any shape) whose descent set is exactly d.
std::vector<StandardTableau> tableaux_with_descent_set(int n, const DescentSet& d);

/// Number of standard tableaux of the shape, counted by corner removal.
BigInt dimension(const Partition& shape);
/// n! / ∏ hook lengths.
BigInt hook_length_dimension(const Partition& shape);

/// Robinson–Schensted row insertion: σ ↦ (P, Q) with P the insertion tableau
/// and Q the recording tableau. Des(Q) = Des(σ) and Des(P) = Des(σ^{-1}).
std::pair<StandardTableau, StandardTableau> rs_correspondence(const Permutation& p);
/// Inverse of rs_correspondence; throws std::invalid_argument on unequal shapes.
Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q);

/// Reflect in the main diagonal: shape conjugates and Des becomes Asc.
StandardTableau transpose_tableau(const StandardTableau& t);

/// Schützenberger evacuation via repeated jeu de taquin deletion of the
/// minimum. Shape-preserving involution with i in Des(T) iff n-i in Des(evac T).
StandardTableau evacuation(const StandardTableau& t);

}  // namespace mmahon
