#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mmahon/common.hpp"
#include "mmahon/permutation.hpp"

namespace mmahon {

/// Tuples (σ1, ..., σk) of S_n with σ1·σ2·...·σk = 1 (left-to-right product).
///
/// Enumeration fixes σ1..σ(k-1) and solves σk = (σ1···σ(k-1))^{-1}, so the
/// cost is (n!)^(k-1). Candidate lists per coordinate restrict the first k-1
/// coordinates; the callback sees each tuple exactly once.
using TupleVisitor = std::function<void(std::span<const Permutation>)>;

/// Visits every element of the product-one set. Throws BudgetExceeded when
/// (n!)^(k-1) exceeds the budget.
void for_each_product_one_tuple(int n, int k, const Budget& budget, const TupleVisitor& visit);

/// Same, but coordinate i (i < k-1) ranges over candidates[i] only; the last
/// coordinate is solved for and passed unfiltered.
void for_each_product_one_tuple(int n, std::span<const std::vector<Permutation>> candidates,
                                const Budget& budget, const TupleVisitor& visit);

/// |{(σ1..σk) : product 1, Des(σi) = D_i for all i}|.
BigInt count_tuples_with_descents(int n, std::span<const DescentSet> profile,
                                  const Budget& budget = {});

/// True iff the tuple multiplies to the identity.
bool is_product_one(std::span<const Permutation> perms);

}  // namespace mmahon
