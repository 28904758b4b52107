#include "mmahon/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "mmahon/tuples.hpp"

namespace mmahon {

std::string to_string(StatKind kind) {
    switch (kind) {
        case StatKind::des: return "Des";
        case StatKind::codes: return "Codes";
        case StatKind::asc: return "Asc";
        case StatKind::coasc: return "Coasc";
    }
    return "?";
}

DescentSet transform(const DescentSet& d, StatKind kind) {
    switch (kind) {
        case StatKind::des: return d;
        case StatKind::codes: return d.reflect();
        case StatKind::asc: return d.complement();
        case StatKind::coasc: return d.complement().reflect();
    }
    return d;
}

DescentSet stat(const Permutation& p, StatKind kind) { return transform(descent_set(p), kind); }

BigInt count_mixed(int n, std::span<const DescentSet> profile, std::span<const StatKind> kinds,
                   std::span<const int> perm, const Budget& budget) {
    const std::size_t k = profile.size();
    if (kinds.size() != k || perm.size() != k)
        throw std::invalid_argument("count_mixed: profile, kinds and permutation differ in length");
    std::vector<DescentSet> target(k);
    std::vector<bool> hit(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(perm[i]);
        if (j >= k || hit[j]) throw std::invalid_argument("count_mixed: perm is not a permutation of [k]");
        hit[j] = true;
        // every transform is an involution, so D = stat(σ) iff Des(σ) = transform(D)
        target[j] = transform(profile[i], kinds[i]);
    }
    return count_tuples_with_descents(n, target, budget);
}

// ---------------------------------------------------------------- histogram

DescentHistogram::DescentHistogram(int n, int k, const Budget& budget) : n_(n), k_(k) {
    const std::uint64_t per = std::uint64_t{1} << (n - 1);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= per;
    counts_.assign(total, 0);
    std::vector<DescentSet> profile(static_cast<std::size_t>(k));
    for_each_product_one_tuple(n, k, budget, [&](std::span<const Permutation> t) {
        for (std::size_t i = 0; i < t.size(); ++i) profile[i] = descent_set(t[i]);
        ++counts_[index_of(profile)];
    });
}

std::uint64_t DescentHistogram::index_of(std::span<const DescentSet> profile) const {
    if (static_cast<int>(profile.size()) != k_) throw std::invalid_argument("profile length differs from k");
    std::uint64_t index = 0;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it) index = (index << (n_ - 1)) | it->mask();
    return index;
}

BigInt DescentHistogram::count(std::span<const DescentSet> profile) const {
    return BigInt(static_cast<unsigned long>(counts_[index_of(profile)]));
}

std::vector<DescentSet> DescentHistogram::profile(std::uint64_t index) const {
    std::vector<DescentSet> out;
    const std::uint64_t mask = (std::uint64_t{1} << (n_ - 1)) - 1;
    for (int i = 0; i < k_; ++i) {
        out.push_back(DescentSet::from_mask(n_, index & mask));
        index >>= (n_ - 1);
    }
    return out;
}

std::vector<std::vector<DescentSet>> select_profiles(int n, int k, std::size_t samples, std::uint64_t seed) {
    const std::uint64_t per = std::uint64_t{1} << (n - 1);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= per;
    std::vector<std::uint64_t> chosen;
    if (samples == 0 || samples >= total) {
        chosen.resize(total);
        std::iota(chosen.begin(), chosen.end(), std::uint64_t{0});
    } else {
        std::mt19937_64 rng(seed);
        std::set<std::uint64_t> picked;
        while (picked.size() < samples) picked.insert(rng() % total);
        chosen.assign(picked.begin(), picked.end());
    }
    std::vector<std::vector<DescentSet>> out;
    out.reserve(chosen.size());
    for (auto index : chosen) {
        std::vector<DescentSet> profile;
        for (int i = 0; i < k; ++i) {
            profile.push_back(DescentSet::from_mask(n, index % per));
            index /= per;
        }
        out.push_back(std::move(profile));
    }
    return out;
}

// ---------------------------------------------------------------- reports

namespace {

std::string profile_string(std::span<const DescentSet> profile) {
    std::string s;
    for (std::size_t i = 0; i < profile.size(); ++i) s += (i ? ";" : "") + profile[i].to_string();
    return s;
}

std::string perm_string(std::span<const int> perm) {
    std::string s;
    for (int p : perm) s += std::to_string(p + 1);
    return s;
}

std::vector<std::vector<int>> all_index_perms(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::string SymmetryReport::to_text() const {
    std::string out = std::string(passed ? "PASS" : "FAIL") + " (" + std::to_string(profiles_checked) +
                      " profiles, " + std::to_string(counts_compared) + " counts compared)";
    for (const auto& f : failures) out += "\n  " + f;
    return out;
}

nlohmann::ordered_json SymmetryReport::to_json() const {
    nlohmann::ordered_json j;
    j["status"] = passed ? "PASS" : "FAIL";
    j["profiles_checked"] = profiles_checked;
    j["counts_compared"] = counts_compared;
    j["profiles"] = details;
    return j;
}

SymmetryReport verify_sym(int n, int k, std::size_t samples, std::uint64_t seed, const Budget& budget) {
    SymmetryReport report;
    const auto perms = all_index_perms(k);
    const std::vector<StatKind> kinds(static_cast<std::size_t>(k), StatKind::des);
    for (const auto& profile : select_profiles(n, k, samples, seed)) {
        const BigInt base = count_mixed(n, profile, kinds, perms.front(), budget);
        bool ok = true;
        nlohmann::ordered_json counts;
        for (const auto& pi : perms) {
            const BigInt c = count_mixed(n, profile, kinds, pi, budget);
            ++report.counts_compared;
            counts[perm_string(pi)] = c.get_str();
            if (c != base) {
                ok = false;
                report.failures.push_back(profile_string(profile) + " pi=" + perm_string(pi) + ": " +
                                          c.get_str() + " != " + base.get_str());
            }
        }
        ++report.profiles_checked;
        report.passed = report.passed && ok;
        nlohmann::ordered_json entry;
        entry["profile"] = profile_string(profile);
        entry["counts"] = std::move(counts);
        entry["status"] = ok ? "PASS" : "FAIL";
        report.details.push_back(std::move(entry));
    }
    return report;
}

StatKind dcac_kind(int i, int i1, int i2, int i3) {
    if (i <= i1) return StatKind::des;
    if (i <= i2) return StatKind::codes;
    if (i <= i3) return StatKind::asc;
    return StatKind::coasc;
}

SymmetryReport verify_dcac(int n, int k, std::size_t samples, std::uint64_t seed, const Budget& budget) {
    SymmetryReport report;
    const DescentHistogram histogram(n, k, budget);
    const auto perms = all_index_perms(k);
    const auto ku = static_cast<std::size_t>(k);

    for (const auto& profile : select_profiles(n, k, samples, seed)) {
        std::optional<BigInt> parity_value[2];
        bool ok = true;
        std::vector<DescentSet> target(ku);
        std::size_t compared = 0;
        std::size_t combos = 0;

        for (int i1 = 0; i1 <= k; ++i1)
            for (int i2 = i1; i2 <= k; ++i2)
                for (int i3 = i2; i3 <= k; ++i3)
                    for (const auto& pi : perms) {
                        for (std::size_t i = 0; i < ku; ++i)
                            target[static_cast<std::size_t>(pi[i])] =
                                transform(profile[i], dcac_kind(static_cast<int>(i) + 1, i1, i2, i3));
                        const BigInt c = histogram.count(target);
                        ++compared;
                        ++combos;
                        auto& slot = parity_value[i2 % 2];
                        if (!slot) {
                            slot = c;
                        } else if (*slot != c) {
                            ok = false;
                            if (report.failures.size() < 50)
                                report.failures.push_back(profile_string(profile) + " (i1,i2,i3)=(" +
                                                          std::to_string(i1) + "," + std::to_string(i2) + "," +
                                                          std::to_string(i3) + ") pi=" + perm_string(pi) + ": " +
                                                          c.get_str() + " != " + slot->get_str());
                        }
                    }

        // Des -> Codes flips on any subset, and the Asc -> Coasc analogue
        const BigInt des_count = histogram.count(profile);
        std::vector<DescentSet> asc_base(ku);
        for (std::size_t i = 0; i < ku; ++i) asc_base[i] = transform(profile[i], StatKind::asc);
        const BigInt asc_count = histogram.count(asc_base);
        for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
            std::vector<DescentSet> flipped(ku), flipped_asc(ku);
            for (std::size_t i = 0; i < ku; ++i) {
                const bool in = (subset >> i) & 1u;
                flipped[i] = transform(profile[i], in ? StatKind::codes : StatKind::des);
                flipped_asc[i] = transform(profile[i], in ? StatKind::coasc : StatKind::asc);
            }
            compared += 2;
            const BigInt a = histogram.count(flipped);
            const BigInt b = histogram.count(flipped_asc);
            if (a != des_count || b != asc_count) {
                ok = false;
                if (report.failures.size() < 50)
                    report.failures.push_back(profile_string(profile) + " Codes-flip subset " +
                                              std::to_string(subset) + ": " + a.get_str() + "/" + b.get_str() +
                                              " vs " + des_count.get_str() + "/" + asc_count.get_str());
            }
        }

        report.counts_compared += compared;
        ++report.profiles_checked;
        report.passed = report.passed && ok;
        nlohmann::ordered_json entry;
        entry["profile"] = profile_string(profile);
        entry["combinations"] = combos;
        entry["even"] = parity_value[0] ? parity_value[0]->get_str() : "";
        entry["odd"] = parity_value[1] ? parity_value[1]->get_str() : "";
        entry["status"] = ok ? "PASS" : "FAIL";
        report.details.push_back(std::move(entry));
    }
    return report;
}

}  // namespace mmahon
