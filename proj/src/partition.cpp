#include "mmahon/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mmahon {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("bad partition syntax: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> columns(parts_.empty() ? 0 : parts_.front(), 0);
    for (int row : parts_)
        for (int c = 0; c < row; ++c) ++columns[c];
    return Partition(std::move(columns));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance order needs partitions of equal size");
    int sa = 0, sb = 0;
    const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_in_box(int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int bound) {
        out.emplace_back(current);
        if (static_cast<int>(current.size()) == max_parts) return;
        for (int p = bound; p >= 1; --p) {
            current.push_back(p);
            rec(p);
            current.pop_back();
        }
    };
    rec(max_part);
    return out;
}

bool dominance_strictly_above(const Multipartition& upper, const Multipartition& lower) {
    if (upper.size() != lower.size())
        throw std::invalid_argument("multipartitions of different length");
    bool strict = false;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (!dominance_leq(lower[i], upper[i])) return false;
        if (lower[i] != upper[i]) strict = true;
    }
    return strict;
}

std::string to_string(const Multipartition& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ' ';
        out += '(' + m[i].to_string() + ')';
    }
    return out;
}

}  // namespace mmahon
