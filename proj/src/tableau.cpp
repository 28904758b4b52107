#include "mmahon/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mmahon {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return lens;
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    shape_ = Partition(row_lengths(rows_));
    const int n = shape_.size();
    row_of_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v - 1)] != -1)
                throw std::invalid_argument("tableau entries must be 1..n, each once");
            row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(r);
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("tableau rows must increase");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("tableau columns must increase");
        }
    }
}

StandardTableau StandardTableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    int depth = 0;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("bad tableau syntax: '" + std::string(text) + "'"); };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '[') {
            ++depth;
            if (depth == 2) rows.emplace_back();
            if (depth > 2) fail();
            ++i;
        } else if (c == ']') {
            --depth;
            if (depth < 0) fail();
            ++i;
        } else if (c == ',' || c == ' ') {
            ++i;
        } else {
            if (depth != 2) fail();
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc()) fail();
            rows.back().push_back(value);
            i = static_cast<std::size_t>(ptr - text.data());
        }
    }
    if (depth != 0) fail();
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(rows_[r][c]);
        }
        out += ']';
    }
    return out + "]";
}

DescentSet descent_set(const StandardTableau& t) {
    const int n = t.size();
    DescentSet d(std::max(n, 1));
    for (int i = 1; i < n; ++i)
        if (t.row_of(i) < t.row_of(i + 1)) d.insert(i);
    return d;
}

TableauDescentData descent_data(const StandardTableau& t) {
    auto d = descent_set(t);
    auto lambda = d.lambda();
    return {d, lambda};
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
    const int n = shape.size();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= shape[r]) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            rows[r].push_back(v);
            place(v + 1);
            rows[r].pop_back();
        }
    };
    place(1);
    return out;
}

StandardTableau canonical_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        rows.emplace_back();
        for (int c = 0; c < len; ++c) rows.back().push_back(next++);
    }
    return StandardTableau(std::move(rows));
}

std::vector<StandardTableau> tableaux_with_descent_set(int n, const DescentSet& d) {
    if (d.n() != n) throw std::invalid_argument("descent set built for a different n");
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows;
    // Entry v+1 goes strictly below v when v is a descent, weakly above otherwise.
    std::function<void(int, int)> place = [&](int v, int prev_row) {
        if (v > n) {
            out.emplace_back(rows);
            return;
        }
        const bool descent = v > 1 && d.contains(v - 1);
        for (std::size_t r = 0; r <= rows.size(); ++r) {
            const int ri = static_cast<int>(r);
            if (v > 1 && descent && ri <= prev_row) continue;
            if (v > 1 && !descent && ri > prev_row) break;
            const std::size_t len = r < rows.size() ? rows[r].size() : 0;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            if (r == rows.size()) rows.emplace_back();
            rows[r].push_back(v);
            place(v + 1, ri);
            rows[r].pop_back();
            if (rows[r].empty()) rows.pop_back();
        }
    };
    place(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt dimension(const Partition& shape) {
    static std::mutex mu;
    static std::map<Partition, BigInt> memo;
    if (shape.size() <= 1) return 1;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(shape); it != memo.end()) return it->second;
    }
    // The entry n sits in some corner; removing it leaves a smaller tableau.
    BigInt total = 0;
    std::vector<int> parts(shape.parts().begin(), shape.parts().end());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
        if (!corner) continue;
        --parts[r];
        total += dimension(Partition(parts));
        ++parts[r];
    }
    std::lock_guard lock(mu);
    memo.emplace(shape, total);
    return total;
}

BigInt hook_length_dimension(const Partition& shape) {
    const auto conj = shape.conjugate();
    BigInt numerator = 1;
    for (int i = 2; i <= shape.size(); ++i) numerator *= i;
    BigInt hooks = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c)
            hooks *= (shape[static_cast<std::size_t>(r)] - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
    return numerator / hooks;
}

std::pair<StandardTableau, StandardTableau> rs_correspondence(const Permutation& p) {
    std::vector<std::vector<int>> P, Q;
    for (int step = 1; step <= p.size(); ++step) {
        int x = p(step);
        std::size_t r = 0;
        while (true) {
            if (r == P.size()) {
                P.push_back({x});
                Q.push_back({step});
                break;
            }
            auto& row = P[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                Q[r].push_back(step);
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    return {StandardTableau(std::move(P)), StandardTableau(std::move(Q))};
}

Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("RS pair must share a shape");
    const int n = p.size();
    auto P = p.rows();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int step = n; step >= 1; --step) {
        // `step` in Q marks the cell created by that insertion; it is the end
        // of its row in P once later insertions have been undone.
        const auto r0 = static_cast<std::size_t>(q.row_of(step));
        int x = P[r0].back();
        P[r0].pop_back();
        for (std::size_t r = r0; r-- > 0;) {
            auto& row = P[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;  // largest entry smaller than x
            std::swap(x, *it);
        }
        word[static_cast<std::size_t>(step - 1)] = x;
        if (P[r0].empty()) P.pop_back();
    }
    return Permutation(std::move(word));
}

StandardTableau transpose_tableau(const StandardTableau& t) {
    const auto& rows = t.rows();
    std::vector<std::vector<int>> cols(rows.empty() ? 0 : rows.front().size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return StandardTableau(std::move(cols));
}

StandardTableau evacuation(const StandardTableau& t) {
    const int n = t.size();
    auto cells = t.rows();
    std::vector<std::vector<int>> result;
    for (int len : t.shape().parts()) result.emplace_back(static_cast<std::size_t>(len), 0);

    // Each round deletes the current minimum from the corner, slides the hole
    // out to an outer corner, and writes the round's label into the vacated cell.
    for (int label = n; label >= 1; --label) {
        std::size_t r = 0, c = 0;
        while (true) {
            const bool has_right = c + 1 < cells[r].size();
            const bool has_below = r + 1 < cells.size() && c < cells[r + 1].size();
            if (!has_right && !has_below) break;
            if (has_right && (!has_below || cells[r][c + 1] < cells[r + 1][c])) {
                cells[r][c] = cells[r][c + 1];
                ++c;
            } else {
                cells[r][c] = cells[r + 1][c];
                ++r;
            }
        }
        cells[r].pop_back();
        if (cells[r].empty()) cells.pop_back();
        result[r][c] = label;
    }
    return StandardTableau(std::move(result));
}

}  // namespace mmahon
