#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mmahon/common.hpp"
#include "mmahon/kronecker.hpp"
#include "mmahon/partition.hpp"
#include "mmahon/polynomial.hpp"
#include "mmahon/tuples.hpp"

namespace mmahon {

/// Σ over standard tableaux T of the shape of Q_block^{λ(T)}, as a polynomial
/// in k blocks of n variables.
MultivarPolynomial refined_fake_degree(const Partition& shape, int block = 0, int k = 1);

/// Σ over product-one k-tuples of ∏_i Q_i^{λ(σ_i)}. Costs (n!)^(k-1) steps.
MultivarPolynomial refined_multimahonian(int n, int k, const Budget& budget = {});

/// Σ over shape tuples μ of d(μ)·∏_i f^{μ(i)}(Q_i), i.e. the Kronecker-weighted
/// sum over tableau tuples. Should agree with refined_multimahonian.
MultivarPolynomial multimahonian_via_kronecker(int n, int k, KroneckerRecursion& engine);

/// Monomial of the descent profile: Q_1^{λ(D_1)} ... Q_k^{λ(D_k)}.
ExponentMatrix profile_exponent(int n, std::span<const DescentSet> profile);

/// Orbit of a monomial of C[X_1..X_k] under simultaneous permutation of the
/// n columns: a multiset of n column vectors in N^k.
struct MonomialOrbit {
    std::vector<std::vector<std::uint32_t>> columns;  // sorted, n entries of length k

    /// Row i of the result is the i-th coordinates sorted decreasingly.
    Multipartition exponent_multipartition() const;
};

/// Every orbit whose entries are all at most `cap`.
std::vector<MonomialOrbit> monomial_orbits(int n, int k, std::uint32_t cap);

/// Σ over orbits (entries ≤ cap) of Q^{Λ(M)}.
MultivarPolynomial hilb_diagonal_invariants_window(int n, int k, Window w);
/// Σ over k-tuples of partitions with ≤ n parts, every part ≤ cap.
MultivarPolynomial hilb_product_invariants_window(int n, int k, Window w);

struct IdentityReport {
    bool passed = true;
    std::size_t monomials_compared = 0;
    /// exponent (flattened) -> (lhs, rhs) for every mismatching monomial
    std::map<std::vector<std::uint32_t>, std::pair<BigInt, BigInt>> mismatches;
    std::string note;

    std::string to_text() const;
};

/// Checks Hilb(diagonal invariants) = W(Q) · Hilb(product invariants) on every
/// monomial with all exponents ≤ cap. The comparison is exact on this window:
/// each factor monomial divides the product monomial, so no term outside the
/// window can contribute to a term inside it.
IdentityReport verify_refined_quotient_identity(int n, int k, Window w, const Budget& budget = {});

/// Counts k-partite partitions (entries ≤ cap) and pairs (product-one tuple,
/// partitions strict at descents, parts ≤ cap), grouped by multidegree, and
/// compares the two histograms. For k = 1 a 1-partite partition is a weakly
/// decreasing vector.
IdentityReport verify_multipartite_count(int n, int k, std::uint32_t cap, const Budget& budget = {});

/// Multidegree histogram of k-partite partitions by direct filtering of
/// ({0..cap}^n)^k.
std::map<Multipartition, BigInt> multipartite_partition_counts(int n, int k, std::uint32_t cap,
                                                               const Budget& budget = {});

}  // namespace mmahon
