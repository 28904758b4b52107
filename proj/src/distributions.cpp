#include "mmahon/distributions.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "mmahon/tableau.hpp"

namespace mmahon {

MultivarPolynomial refined_fake_degree(const Partition& shape, int block, int k) {
    const int n = shape.size();
    if (n < 1) throw std::invalid_argument("fake degree needs a nonempty shape");
    MultivarPolynomial f(k, n);
    for (const auto& t : enumerate_standard_tableaux(shape))
        f.add_term(ExponentMatrix::from_partition(k, n, block, descent_data(t).lambda), 1);
    return f;
}

ExponentMatrix profile_exponent(int n, std::span<const DescentSet> profile) {
    const int k = static_cast<int>(profile.size());
    ExponentMatrix e(k, n);
    for (int i = 0; i < k; ++i) {
        const auto lambda = profile[static_cast<std::size_t>(i)].lambda();
        for (int j = 0; j < lambda.length(); ++j)
            e(i, j) = static_cast<std::uint32_t>(lambda[static_cast<std::size_t>(j)]);
    }
    return e;
}

MultivarPolynomial refined_multimahonian(int n, int k, const Budget& budget) {
    if (n < 1 || k < 1) throw std::invalid_argument("refined multimahonian needs n, k >= 1");
    MultivarPolynomial w(k, n);
    std::vector<DescentSet> profile(static_cast<std::size_t>(k));
    for_each_product_one_tuple(n, k, budget, [&](std::span<const Permutation> t) {
        for (std::size_t i = 0; i < t.size(); ++i) profile[i] = descent_set(t[i]);
        w.add_term(profile_exponent(n, profile), 1);
    });
    return w;
}

MultivarPolynomial multimahonian_via_kronecker(int n, int k, KroneckerRecursion& engine) {
    if (engine.n() != n) throw std::invalid_argument("Kronecker engine built for a different n");
    std::map<std::pair<Partition, int>, MultivarPolynomial> fake;
    auto fake_degree = [&](const Partition& mu, int block) -> const MultivarPolynomial& {
        auto key = std::make_pair(mu, block);
        auto it = fake.find(key);
        if (it == fake.end()) it = fake.emplace(key, refined_fake_degree(mu, block, k)).first;
        return it->second;
    };
    MultivarPolynomial total(k, n);
    for (const auto& key : all_keys(n, k)) {
        const BigInt d = engine.value(key);
        if (sgn(d) == 0) continue;
        auto term = MultivarPolynomial::constant(k, n, d);
        for (int i = 0; i < k; ++i) term = mul(term, fake_degree(key[static_cast<std::size_t>(i)], i));
        total += term;
    }
    return total;
}

Multipartition MonomialOrbit::exponent_multipartition() const {
    const std::size_t k = columns.empty() ? 0 : columns.front().size();
    Multipartition out;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> values;
        for (const auto& col : columns) values.push_back(static_cast<int>(col[i]));
        out.push_back(Partition::from_unsorted(std::move(values)));
    }
    return out;
}

std::vector<MonomialOrbit> monomial_orbits(int n, int k, std::uint32_t cap) {
    std::uint64_t radix = 1;
    for (int i = 0; i < k; ++i) radix *= cap + 1;
    auto decode = [&](std::uint64_t code) {
        std::vector<std::uint32_t> col(static_cast<std::size_t>(k));
        for (int i = k - 1; i >= 0; --i) {
            col[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code % (cap + 1));
            code /= cap + 1;
        }
        return col;
    };
    std::vector<MonomialOrbit> out;
    std::vector<std::uint64_t> codes;
    // multisets of size n = nondecreasing code sequences
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
        if (static_cast<int>(codes.size()) == n) {
            MonomialOrbit orbit;
            for (auto c : codes) orbit.columns.push_back(decode(c));
            out.push_back(std::move(orbit));
            return;
        }
        for (std::uint64_t c = start; c < radix; ++c) {
            codes.push_back(c);
            rec(c);
            codes.pop_back();
        }
    };
    rec(0);
    return out;
}

MultivarPolynomial hilb_diagonal_invariants_window(int n, int k, Window w) {
    MultivarPolynomial h(k, n);
    for (const auto& orbit : monomial_orbits(n, k, w.cap))
        h.add_term(ExponentMatrix::from_multipartition(n, orbit.exponent_multipartition()), 1);
    return h;
}

MultivarPolynomial hilb_product_invariants_window(int n, int k, Window w) {
    auto h = MultivarPolynomial::constant(k, n, 1);
    const auto box = partitions_in_box(n, static_cast<int>(w.cap));
    for (int i = 0; i < k; ++i) {
        MultivarPolynomial block(k, n);
        for (const auto& p : box) block.add_term(ExponentMatrix::from_partition(k, n, i, p), 1);
        h = mul(h, block);
    }
    return h;
}

std::string IdentityReport::to_text() const {
    std::string out = std::string(passed ? "PASS" : "FAIL") + " (" + std::to_string(monomials_compared) +
                      " monomials compared)";
    if (!note.empty()) out += "\n  note: " + note;
    for (const auto& [exp, pair] : mismatches) {
        out += "\n  exp=[";
        for (std::size_t i = 0; i < exp.size(); ++i) out += (i ? "," : "") + std::to_string(exp[i]);
        out += "] lhs=" + pair.first.get_str() + " rhs=" + pair.second.get_str();
    }
    return out;
}

namespace {

IdentityReport compare_on_window(const MultivarPolynomial& lhs, const MultivarPolynomial& rhs) {
    IdentityReport report;
    std::map<std::vector<std::uint32_t>, std::pair<BigInt, BigInt>> merged;
    for (const auto& [key, c] : lhs.terms()) merged[key].first = c;
    for (const auto& [key, c] : rhs.terms()) merged[key].second = c;
    report.monomials_compared = merged.size();
    for (const auto& [key, pair] : merged)
        if (pair.first != pair.second) report.mismatches.emplace(key, pair);
    report.passed = report.mismatches.empty();
    return report;
}

}  // namespace

IdentityReport verify_refined_quotient_identity(int n, int k, Window w, const Budget& budget) {
    const auto lhs = hilb_diagonal_invariants_window(n, k, w);
    const auto series = refined_multimahonian(n, k, budget);
    const auto rhs = mul_windowed(series, hilb_product_invariants_window(n, k, w), w);
    auto report = compare_on_window(lhs, rhs);
    report.note = "compared on all monomials with every exponent <= " + std::to_string(w.cap) +
                  "; exact there because factor monomials divide product monomials";
    return report;
}

std::map<Multipartition, BigInt> multipartite_partition_counts(int n, int k, std::uint32_t cap,
                                                               const Budget& budget) {
    const double cells = static_cast<double>(n) * k;
    budget.check(std::pow(static_cast<double>(cap) + 1.0, cells), "k-partite partition enumeration");
    std::vector<std::vector<std::uint32_t>> f(static_cast<std::size_t>(k),
                                              std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    std::map<Multipartition, BigInt> counts;
    auto is_kpartite = [&] {
        for (int j = 0; j + 1 < n; ++j) {
            bool tied = true;  // f^(h)_j == f^(h)_{j+1} for all h < i
            for (int i = 0; i < k && tied; ++i) {
                const auto a = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const auto b = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
                if (a < b) return false;
                tied = a == b;
            }
        }
        return true;
    };
    // odometer over every cell of the k×n matrix
    while (true) {
        if (is_kpartite()) {
            Multipartition degree;
            for (const auto& row : f)
                degree.push_back(Partition::from_unsorted(std::vector<int>(row.begin(), row.end())));
            ++counts[degree];
        }
        int cell = k * n - 1;
        for (; cell >= 0; --cell) {
            auto& v = f[static_cast<std::size_t>(cell / n)][static_cast<std::size_t>(cell % n)];
            if (++v <= cap) break;
            v = 0;
        }
        if (cell < 0) break;
    }
    return counts;
}

IdentityReport verify_multipartite_count(int n, int k, std::uint32_t cap, const Budget& budget) {
    const auto lhs = multipartite_partition_counts(n, k, cap, budget);

    // weakly decreasing length-n vectors with entries ≤ cap, strict at the descents
    std::map<DescentSet, std::vector<Partition>> strict_cache;
    auto strict_partitions = [&](const DescentSet& d) -> const std::vector<Partition>& {
        auto it = strict_cache.find(d);
        if (it != strict_cache.end()) return it->second;
        std::vector<Partition> list;
        std::vector<int> v;
        std::function<void(int)> rec = [&](int bound) {
            const int j = static_cast<int>(v.size());  // 0-based position to fill
            if (j == n) {
                list.emplace_back(v);
                return;
            }
            const int hi = j == 0 ? bound : (d.contains(j) ? v.back() - 1 : v.back());
            for (int x = hi; x >= 0; --x) {
                v.push_back(x);
                rec(bound);
                v.pop_back();
            }
        };
        rec(static_cast<int>(cap));
        return strict_cache.emplace(d, std::move(list)).first->second;
    };

    std::map<Multipartition, BigInt> rhs;
    for_each_product_one_tuple(n, k, budget, [&](std::span<const Permutation> t) {
        std::vector<const std::vector<Partition>*> options;
        for (const auto& s : t) options.push_back(&strict_partitions(descent_set(s)));
        for (const auto* o : options)
            if (o->empty()) return;
        std::vector<std::size_t> idx(options.size(), 0);
        Multipartition degree(options.size());
        for (bool more = true; more;) {
            for (std::size_t i = 0; i < options.size(); ++i) degree[i] = (*options[i])[idx[i]];
            ++rhs[degree];
            more = false;
            for (std::size_t pos = options.size(); pos-- > 0;) {
                if (++idx[pos] < options[pos]->size()) {
                    more = true;
                    break;
                }
                idx[pos] = 0;
            }
        }
    });

    IdentityReport report;
    std::map<Multipartition, std::pair<BigInt, BigInt>> merged;
    for (const auto& [deg, c] : lhs) merged[deg].first = c;
    for (const auto& [deg, c] : rhs) merged[deg].second = c;
    report.monomials_compared = merged.size();
    for (const auto& [deg, pair] : merged) {
        if (pair.first == pair.second) continue;
        auto e = ExponentMatrix::from_multipartition(n, deg);
        report.mismatches.emplace(std::vector<std::uint32_t>(e.flat().begin(), e.flat().end()), pair);
    }
    report.passed = report.mismatches.empty();
    report.note = "per-multidegree counts, entries <= " + std::to_string(cap);
    return report;
}

}  // namespace mmahon
