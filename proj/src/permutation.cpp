#include "mmahon/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mmahon {

// ---------------------------------------------------------------- DescentSet

void DescentSet::check_n(int n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("descent set ground size out of range: " + std::to_string(n));
}

DescentSet::DescentSet(int n, std::span<const int> elements) : n_(n) {
    check_n(n);
    for (int i : elements) insert(i);
}

DescentSet DescentSet::from_mask(int n, std::uint64_t mask) {
    DescentSet d(n);
    if (n < 64 && (mask >> (n - 1)) != 0)
        throw std::invalid_argument("descent mask has bits outside [n-1]");
    d.bits_ = mask << 1;
    return d;
}

DescentSet DescentSet::parse(int n, std::string_view text) {
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    DescentSet d(n);
    if (text.empty()) return d;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("bad descent set syntax: '" + std::string(text) + "'");
        d.insert(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return d;
}

void DescentSet::insert(int i) {
    if (i < 1 || i >= n_)
        throw std::invalid_argument("descent " + std::to_string(i) + " outside [1," +
                                    std::to_string(n_ - 1) + "]");
    bits_ |= std::uint64_t{1} << i;
}

std::vector<int> DescentSet::elements() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

int DescentSet::count() const { return std::popcount(bits_); }

int DescentSet::sum() const {
    int s = 0;
    for (int i = 1; i < n_; ++i)
        if (contains(i)) s += i;
    return s;
}

Partition DescentSet::lambda() const {
    std::vector<int> parts(static_cast<std::size_t>(n_), 0);
    int running = 0;
    for (int i = n_; i >= 1; --i) {
        if (contains(i)) ++running;
        parts[static_cast<std::size_t>(i - 1)] = running;
    }
    return Partition(std::move(parts));
}

DescentSet DescentSet::complement() const {
    DescentSet d(n_);
    for (int i = 1; i < n_; ++i)
        if (!contains(i)) d.insert(i);
    return d;
}

DescentSet DescentSet::reflect() const {
    DescentSet d(n_);
    for (int i = 1; i < n_; ++i)
        if (contains(n_ - i)) d.insert(i);
    return d;
}

std::string DescentSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::vector<DescentSet> all_descent_sets(int n) {
    std::vector<DescentSet> out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) out.push_back(DescentSet::from_mask(n, m));
    return out;
}

// --------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit");
            w.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw std::invalid_argument("bad permutation syntax");
            w.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

DescentSet descent_set(const Permutation& p) {
    DescentSet d(p.size());
    auto w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
}

PermutationStatistics statistics(const Permutation& p) {
    PermutationStatistics s;
    s.maj = descent_set(p).sum();
    auto w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++s.inv;
    return s;
}

Partition lambda_of_permutation(const Permutation& p) { return descent_set(p).lambda(); }

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(i - 1)] = q(p(i));
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(w));
}

Permutation product(std::span<const Permutation> perms) {
    if (perms.empty()) throw std::invalid_argument("product of an empty tuple");
    Permutation acc = perms.front();
    for (std::size_t i = 1; i < perms.size(); ++i) acc = compose(acc, perms[i]);
    return acc;
}

Permutation reverse_word(const Permutation& p) {
    std::vector<int> w(p.word().begin(), p.word().end());
    std::reverse(w.begin(), w.end());
    return Permutation(std::move(w));
}

Permutation complement_values(const Permutation& p) {
    std::vector<int> w(p.word().begin(), p.word().end());
    for (int& v : w) v = p.size() + 1 - v;
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> permutations_with_descent_set(int n, const DescentSet& d) {
    if (d.n() != n) throw std::invalid_argument("descent set built for a different n");
    // Block lengths of the composition of n cut at the descents.
    std::vector<int> blocks;
    int start = 0;
    for (int i : d.elements()) {
        blocks.push_back(i - start);
        start = i;
    }
    blocks.push_back(n - start);

    std::vector<Permutation> out;
    std::vector<int> word;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    word.reserve(static_cast<std::size_t>(n));

    // Fill block b starting at position pos with an increasing run whose first
    // entry is below the previous block's last entry.
    std::function<void(std::size_t, int, int)> fill = [&](std::size_t b, int remaining, int min_value) {
        if (remaining == 0) {
            if (b + 1 == blocks.size()) {
                out.emplace_back(word);
                return;
            }
            const int prev_last = word.back();
            const int next_len = blocks[b + 1];
            // the next block's first entry must be smaller than prev_last
            for (int v = 1; v < prev_last; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                used[static_cast<std::size_t>(v)] = true;
                word.push_back(v);
                fill(b + 1, next_len - 1, v + 1);
                word.pop_back();
                used[static_cast<std::size_t>(v)] = false;
            }
            return;
        }
        for (int v = min_value; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            word.push_back(v);
            fill(b, remaining - 1, v + 1);
            word.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    fill(0, blocks.front(), 1);
    return out;
}

std::vector<BigInt> mahonian_polynomial(int n, MahonianStat stat) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        auto s = statistics(Permutation(w));
        ++coeffs[static_cast<std::size_t>(stat == MahonianStat::maj ? s.maj : s.inv)];
    } while (std::next_permutation(w.begin(), w.end()));
    return coeffs;
}

std::vector<BigInt> q_factorial(int n) {
    std::vector<BigInt> acc{1};
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<BigInt> next(acc.size() + static_cast<std::size_t>(i), 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (int b = 0; b <= i; ++b) next[a + static_cast<std::size_t>(b)] += acc[a];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace mmahon
