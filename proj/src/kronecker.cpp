#include "mmahon/kronecker.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "mmahon/tableau.hpp"
#include "mmahon/tuples.hpp"

namespace mmahon {

// ---------------------------------------------------------------- characters

namespace {

struct MnKey {
    Partition shape;
    std::vector<int> cycles;  // remaining cycle lengths
    friend auto operator<=>(const MnKey&, const MnKey&) = default;
};

// Beta-set of a partition padded to `len` parts: β_i = λ_i + (len - 1 - i).
std::vector<int> beta_set(const Partition& p, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + (len - 1 - i);
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < len; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    return Partition(std::move(parts));
}

std::int64_t mn_value(const Partition& shape, std::span<const int> cycles,
                      std::map<MnKey, std::int64_t>& memo) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    MnKey key{shape, std::vector<int>(cycles.begin(), cycles.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Removing a border strip of length r moves one bead from β to β - r.
    const int r = cycles.front();
    const int len = shape.length();
    auto beta = beta_set(shape, len);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        auto moved = beta;
        moved[i] = target;
        const std::int64_t sub = mn_value(from_beta_set(std::move(moved)), cycles.subspan(1), memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t character_value(const Partition& irrep, const Partition& cycle_type) {
    if (irrep.size() != cycle_type.size())
        throw std::invalid_argument("character: irrep and class are partitions of different n");
    std::map<MnKey, std::int64_t> memo;
    return mn_value(irrep, cycle_type.parts(), memo);
}

BigInt class_size(const Partition& cycle_type) {
    BigInt z = 1;
    std::map<int, int> multiplicity;
    for (int part : cycle_type.parts()) ++multiplicity[part];
    for (const auto& [part, m] : multiplicity) {
        for (int i = 0; i < m; ++i) z *= part;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    BigInt nf = 1;
    for (int i = 2; i <= cycle_type.size(); ++i) nf *= i;
    return nf / z;
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
    std::map<MnKey, std::int64_t> memo;
    values_.assign(labels_.size(), std::vector<std::int64_t>(labels_.size(), 0));
    for (std::size_t a = 0; a < labels_.size(); ++a)
        for (std::size_t c = 0; c < labels_.size(); ++c)
            values_[a][c] = mn_value(labels_[a], labels_[c].parts(), memo);
    for (const auto& rho : labels_) class_sizes_.push_back(mmahon::class_size(rho));
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("(" + p.to_string() + ") is not a partition of " + std::to_string(n_));
    return it->second;
}

std::int64_t CharacterTable::value(const Partition& irrep, const Partition& cycle_type) const {
    return values_[index_of(irrep)][index_of(cycle_type)];
}

const BigInt& CharacterTable::class_size(const Partition& cycle_type) const {
    return class_sizes_[index_of(cycle_type)];
}

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[n];
    if (!slot) slot = std::make_unique<CharacterTable>(n);
    return *slot;
}

BigInt kronecker_character(const Multipartition& key) {
    if (key.empty()) throw std::invalid_argument("Kronecker key needs at least one shape");
    const int n = key.front().size();
    for (const auto& p : key)
        if (p.size() != n) throw std::invalid_argument("Kronecker key shapes have different sizes");
    const auto& table = character_table(n);
    BigInt sum = 0;
    for (const auto& rho : table.labels()) {
        BigInt term = table.class_size(rho);
        for (const auto& mu : key) term *= static_cast<long>(table.value(mu, rho));
        sum += term;
    }
    BigInt nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    if (sgn(sum) < 0 || !mpz_divisible_p(sum.get_mpz_t(), nf.get_mpz_t()))
        throw std::logic_error("character sum " + sum.get_str() + " is not a nonnegative multiple of n!");
    return sum / nf;
}

// ---------------------------------------------------------------- cache table

std::string to_string(Provenance p) { return p == Provenance::recursion ? "recursion" : "character"; }

Multipartition canonical_key(Multipartition key) {
    std::sort(key.begin(), key.end(), std::greater<>());
    return key;
}

void KroneckerTable::validate_key(const Multipartition& key) const {
    if (key.empty()) throw std::invalid_argument("Kronecker key needs at least one shape");
    for (const auto& p : key)
        if (p.size() != n_)
            throw std::invalid_argument("shape (" + p.to_string() + ") is not a partition of " + std::to_string(n_));
}

std::optional<KroneckerTable::Entry> KroneckerTable::find(const Multipartition& key) const {
    auto it = entries_.find(canonical_key(key));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void KroneckerTable::insert(const Multipartition& key, const BigInt& value, Provenance provenance) {
    validate_key(key);
    if (sgn(value) < 0) throw std::invalid_argument("Kronecker coefficients are nonnegative");
    entries_[canonical_key(key)] = Entry{value, provenance};
}

nlohmann::ordered_json KroneckerTable::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    auto list = nlohmann::ordered_json::array();
    for (const auto& [key, entry] : entries_) {
        nlohmann::ordered_json e;
        auto shapes = nlohmann::ordered_json::array();
        for (const auto& p : key) shapes.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
        e["shapes"] = std::move(shapes);
        e["value"] = entry.value.get_str();
        e["provenance"] = to_string(entry.provenance);
        list.push_back(std::move(e));
    }
    j["entries"] = std::move(list);
    return j;
}

KroneckerTable KroneckerTable::from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw CacheError(CacheError::npos, "cache file lacks an integer \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw CacheError(CacheError::npos, "cache \"n\" must be positive");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw CacheError(CacheError::npos, "cache file lacks an \"entries\" array");
    KroneckerTable table(n);
    std::size_t index = 0;
    for (const auto& e : j["entries"]) {
        try {
            Multipartition key;
            for (const auto& shape : e.at("shapes")) key.emplace_back(shape.get<std::vector<int>>());
            table.validate_key(key);
            BigInt value;
            const auto text = e.at("value").get<std::string>();
            if (value.set_str(text, 10) != 0) throw std::invalid_argument("value '" + text + "' is not an integer");
            if (sgn(value) < 0) throw std::invalid_argument("negative value " + text);
            const auto prov = e.at("provenance").get<std::string>();
            Provenance p;
            if (prov == "recursion") p = Provenance::recursion;
            else if (prov == "character") p = Provenance::character;
            else throw std::invalid_argument("unknown provenance '" + prov + "'");
            if (table.entries_.count(canonical_key(key)))
                throw std::invalid_argument("duplicate key " + mmahon::to_string(key));
            table.entries_.emplace(canonical_key(key), Entry{value, p});
        } catch (const std::invalid_argument& ex) {
            throw CacheError(index, ex.what());
        } catch (const nlohmann::json::exception& ex) {
            throw CacheError(index, ex.what());
        }
        ++index;
    }
    return table;
}

bool operator==(const KroneckerTable& a, const KroneckerTable& b) {
    if (a.n_ != b.n_ || a.entries_.size() != b.entries_.size()) return false;
    auto it = b.entries_.begin();
    for (const auto& [key, entry] : a.entries_) {
        if (key != it->first || entry.value != it->second.value || entry.provenance != it->second.provenance)
            return false;
        ++it;
    }
    return true;
}

KroneckerTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError(CacheError::npos, "cannot open " + path);
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw CacheError(CacheError::npos, std::string("cache is not valid JSON: ") + ex.what());
    }
    return KroneckerTable::from_json(j);
}

void save_table(const KroneckerTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << table.to_json().dump(1) << '\n';
}

// ---------------------------------------------------------------- recursion

KroneckerRecursion::KroneckerRecursion(int n, Budget budget) : n_(n), budget_(budget), table_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
}

KroneckerRecursion::KroneckerRecursion(KroneckerTable table, Budget budget)
    : n_(table.n()), budget_(budget), table_(std::move(table)) {}

const std::vector<KroneckerRecursion::ShapeCount>& KroneckerRecursion::shapes_with_descents(const DescentSet& d) {
    auto it = shapes_by_descents_.find(d);
    if (it != shapes_by_descents_.end()) return it->second;
    std::map<Partition, std::uint64_t> counts;
    for (const auto& t : tableaux_with_descent_set(n_, d)) ++counts[t.shape()];
    std::vector<ShapeCount> list;
    for (auto c = counts.rbegin(); c != counts.rend(); ++c) list.push_back({c->first, c->second});
    return shapes_by_descents_.emplace(d, std::move(list)).first->second;
}

BigInt KroneckerRecursion::descent_count(const std::vector<DescentSet>& profile) {
    auto it = descent_counts_.find(profile);
    if (it != descent_counts_.end()) return it->second;
    auto count = count_tuples_with_descents(n_, profile, budget_);
    descent_counts_.emplace(profile, count);
    return count;
}

BigInt KroneckerRecursion::value(const Multipartition& raw_key) {
    if (raw_key.empty()) throw std::invalid_argument("Kronecker key needs at least one shape");
    for (const auto& p : raw_key)
        if (p.size() != n_)
            throw std::invalid_argument("shape (" + p.to_string() + ") is not a partition of " + std::to_string(n_));
    const Multipartition key = canonical_key(raw_key);
    if (auto hit = table_.find(key); hit && hit->provenance == Provenance::recursion) return hit->value;
    if (!in_progress_.insert(key).second)
        throw std::logic_error("cyclic dependency in Kronecker recursion at " + to_string(key));

    std::vector<DescentSet> profile;
    for (const auto& mu : key) profile.push_back(descent_set(canonical_tableau(mu)));
    BigInt total = descent_count(profile);

    std::vector<const std::vector<ShapeCount>*> options;
    for (const auto& d : profile) options.push_back(&shapes_with_descents(d));

    const std::size_t k = key.size();
    std::vector<std::size_t> idx(k, 0);
    Multipartition shapes(k);
    for (bool more = true; more;) {
        BigInt weight = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& sc = (*options[i])[idx[i]];
            shapes[i] = sc.shape;
            weight *= static_cast<unsigned long>(sc.tableaux);
        }
        if (shapes == key) {
            if (weight != 1)
                throw std::logic_error("canonical tableau is not unique among its descent class");
        } else {
            if (!dominance_strictly_above(shapes, key))
                throw std::logic_error("tableau shape below its canonical shape in dominance order");
            total -= weight * value(shapes);
        }
        more = false;
        for (std::size_t pos = k; pos-- > 0;) {
            if (++idx[pos] < options[pos]->size()) {
                more = true;
                break;
            }
            idx[pos] = 0;
        }
    }
    in_progress_.erase(key);
    if (sgn(total) < 0)
        throw std::logic_error("negative Kronecker coefficient from recursion at " + to_string(key));
    table_.insert(key, total, Provenance::recursion);
    return total;
}

void KroneckerRecursion::fill_all(int k) {
    for (const auto& key : canonical_keys(n_, k)) value(key);
}

std::map<Partition, BigInt> tensor_decompose(const Partition& a, const Partition& b,
                                             KroneckerRecursion& engine) {
    if (a.size() != b.size()) throw std::invalid_argument("tensor factors have different sizes");
    std::map<Partition, BigInt> out;
    for (const auto& rho : partitions_of(a.size())) {
        auto d = engine.value({a, b, rho});
        if (sgn(d) != 0) out.emplace(rho, d);
    }
    return out;
}

std::vector<Multipartition> canonical_keys(int n, int k) {
    const auto parts = partitions_of(n);
    std::vector<Multipartition> out;
    Multipartition current;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < parts.size(); ++i) {
            current.push_back(parts[i]);
            rec(i);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Multipartition> all_keys(int n, int k) {
    const auto parts = partitions_of(n);
    std::vector<Multipartition> out;
    Multipartition current;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (const auto& p : parts) {
            current.push_back(p);
            rec();
            current.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace mmahon
