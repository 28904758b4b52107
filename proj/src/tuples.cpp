#include "mmahon/tuples.hpp"

#include <stdexcept>

namespace mmahon {

void for_each_product_one_tuple(int n, std::span<const std::vector<Permutation>> candidates,
                                const Budget& budget, const TupleVisitor& visit) {
    const std::size_t free = candidates.size();
    const std::size_t k = free + 1;
    double steps = 1.0;
    for (const auto& c : candidates) steps *= static_cast<double>(c.size());
    budget.check(steps, "product-one tuple enumeration");

    std::vector<Permutation> tuple(k);
    if (free == 0) {
        tuple[0] = Permutation::identity(n);
        visit(tuple);
        return;
    }
    for (const auto& c : candidates)
        if (c.empty()) return;

    // prefix[i] = σ1···σi; prefix[0] = identity.
    std::vector<Permutation> prefix(k);
    prefix[0] = Permutation::identity(n);
    std::vector<std::size_t> index(free, 0);
    for (std::size_t i = 0; i < free; ++i) {
        tuple[i] = candidates[i][0];
        prefix[i + 1] = compose(prefix[i], tuple[i]);
    }
    while (true) {
        tuple[free] = inverse(prefix[free]);
        visit(tuple);

        // odometer on the last free coordinate first
        std::size_t pos = free;
        while (pos > 0) {
            --pos;
            if (++index[pos] < candidates[pos].size()) break;
            index[pos] = 0;
            if (pos == 0) return;
        }
        for (std::size_t i = pos; i < free; ++i) {
            tuple[i] = candidates[i][index[i]];
            prefix[i + 1] = compose(prefix[i], tuple[i]);
        }
    }
}

void for_each_product_one_tuple(int n, int k, const Budget& budget, const TupleVisitor& visit) {
    if (k < 1) throw std::invalid_argument("tuple length k must be >= 1");
    double steps = 1.0;
    for (int i = 0; i + 1 < k; ++i) steps *= static_cast<double>(factorial(n));
    budget.check(steps, "product-one tuple enumeration");
    const auto all = k > 1 ? all_permutations(n) : std::vector<Permutation>{};
    std::vector<std::vector<Permutation>> candidates(static_cast<std::size_t>(k - 1), all);
    for_each_product_one_tuple(n, candidates, budget, visit);
}

BigInt count_tuples_with_descents(int n, std::span<const DescentSet> profile, const Budget& budget) {
    if (profile.empty()) throw std::invalid_argument("empty descent profile");
    for (const auto& d : profile)
        if (d.n() != n) throw std::invalid_argument("descent profile built for a different n");
    std::vector<std::vector<Permutation>> candidates;
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        candidates.push_back(permutations_with_descent_set(n, profile[i]));
    const DescentSet& last = profile.back();
    BigInt count = 0;
    for_each_product_one_tuple(n, candidates, budget, [&](std::span<const Permutation> t) {
        if (descent_set(t.back()) == last) ++count;
    });
    return count;
}

bool is_product_one(std::span<const Permutation> perms) { return product(perms).is_identity(); }

}  // namespace mmahon
