#include "mmahon/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmahon {

ExponentMatrix::ExponentMatrix(int k, int n, std::vector<std::uint32_t> flat)
    : k_(k), n_(n), entries_(std::move(flat)) {
    if (entries_.size() != static_cast<std::size_t>(k * n))
        throw std::invalid_argument("exponent vector does not match k*n");
}

ExponentMatrix ExponentMatrix::from_partition(int k, int n, int block, const Partition& p) {
    if (block < 0 || block >= k) throw std::invalid_argument("variable block out of range");
    if (p.length() > n) throw std::invalid_argument("partition has more than n parts");
    ExponentMatrix e(k, n);
    for (int j = 0; j < p.length(); ++j)
        e(block, j) = static_cast<std::uint32_t>(p[static_cast<std::size_t>(j)]);
    return e;
}

ExponentMatrix ExponentMatrix::from_multipartition(int n, const Multipartition& m) {
    const int k = static_cast<int>(m.size());
    ExponentMatrix e(k, n);
    for (int i = 0; i < k; ++i) {
        const auto& p = m[static_cast<std::size_t>(i)];
        if (p.length() > n) throw std::invalid_argument("partition has more than n parts");
        for (int j = 0; j < p.length(); ++j)
            e(i, j) = static_cast<std::uint32_t>(p[static_cast<std::size_t>(j)]);
    }
    return e;
}

std::uint32_t ExponentMatrix::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

MultivarPolynomial MultivarPolynomial::constant(int k, int n, const BigInt& c) {
    MultivarPolynomial p(k, n);
    p.add_term(ExponentMatrix(k, n), c);
    return p;
}

MultivarPolynomial MultivarPolynomial::monomial(const ExponentMatrix& e, const BigInt& c) {
    MultivarPolynomial p(e.k(), e.n());
    p.add_term(e, c);
    return p;
}

BigInt MultivarPolynomial::coefficient(const ExponentMatrix& e) const {
    if (e.k() != k_ || e.n() != n_) throw std::invalid_argument("exponent matrix dimension mismatch");
    auto it = terms_.find(Key(e.flat().begin(), e.flat().end()));
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultivarPolynomial::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [_, c] : terms_) s += c;
    return s;
}

bool MultivarPolynomial::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

void MultivarPolynomial::add_term(const ExponentMatrix& e, const BigInt& c) {
    if (e.k() != k_ || e.n() != n_) throw std::invalid_argument("exponent matrix dimension mismatch");
    add_term(Key(e.flat().begin(), e.flat().end()), c);
}

void MultivarPolynomial::add_term(const Key& flat, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(flat, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void MultivarPolynomial::check_compatible(const MultivarPolynomial& other) const {
    if (k_ != other.k_ || n_ != other.n_)
        throw std::invalid_argument("polynomials live in different variable sets");
}

MultivarPolynomial& MultivarPolynomial::operator+=(const MultivarPolynomial& other) {
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

MultivarPolynomial& MultivarPolynomial::operator-=(const MultivarPolynomial& other) {
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

std::string MultivarPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string mono;
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < n_; ++j) {
                const auto e = key[static_cast<std::size_t>(i * n_ + j)];
                if (e == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += "q[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
                if (e > 1) mono += "^" + std::to_string(e);
            }
        BigInt mag = abs(c);
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + "*" + mono;
        if (first) out += (sgn(c) < 0 ? "-" : "") + term;
        else out += (sgn(c) < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

MultivarPolynomial add(const MultivarPolynomial& a, const MultivarPolynomial& b) { return a + b; }

namespace {

MultivarPolynomial multiply(const MultivarPolynomial& a, const MultivarPolynomial& b,
                            std::uint32_t cap) {
    if (a.k() != b.k() || a.n() != b.n())
        throw std::invalid_argument("polynomials live in different variable sets");
    MultivarPolynomial out(a.k(), a.n());
    MultivarPolynomial::Key key;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            key.resize(ka.size());
            bool inside = true;
            for (std::size_t i = 0; i < ka.size(); ++i) {
                key[i] = ka[i] + kb[i];
                if (key[i] > cap) {
                    inside = false;
                    break;
                }
            }
            if (inside) out.add_term(key, ca * cb);
        }
    }
    return out;
}

}  // namespace

MultivarPolynomial mul(const MultivarPolynomial& a, const MultivarPolynomial& b) {
    return multiply(a, b, UINT32_MAX);
}

MultivarPolynomial mul_windowed(const MultivarPolynomial& a, const MultivarPolynomial& b, Window w) {
    return multiply(a, b, w.cap);
}

MultivarPolynomial truncate(const MultivarPolynomial& p, Window w) {
    MultivarPolynomial out(p.k(), p.n());
    for (const auto& [key, c] : p.terms())
        if (std::all_of(key.begin(), key.end(), [&](std::uint32_t e) { return e <= w.cap; }))
            out.add_term(key, c);
    return out;
}

BigInt coefficient(const MultivarPolynomial& p, const ExponentMatrix& e) { return p.coefficient(e); }

MultivarPolynomial specialize_coarse(const MultivarPolynomial& p) {
    MultivarPolynomial out(p.k(), 1);
    MultivarPolynomial::Key key(static_cast<std::size_t>(p.k()));
    for (const auto& [flat, c] : p.terms()) {
        for (int i = 0; i < p.k(); ++i) {
            std::uint32_t row = 0;
            for (int j = 0; j < p.n(); ++j) row += flat[static_cast<std::size_t>(i * p.n() + j)];
            key[static_cast<std::size_t>(i)] = row;
        }
        out.add_term(key, c);
    }
    return out;
}

nlohmann::ordered_json to_json(const MultivarPolynomial& p) {
    nlohmann::ordered_json j;
    j["k"] = p.k();
    j["n"] = p.n();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [flat, c] : p.terms()) {
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < p.k(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int jj = 0; jj < p.n(); ++jj) row.push_back(flat[static_cast<std::size_t>(i * p.n() + jj)]);
            rows.push_back(std::move(row));
        }
        nlohmann::ordered_json term;
        term["exp"] = std::move(rows);
        term["coef"] = c.get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultivarPolynomial polynomial_from_json(const nlohmann::ordered_json& j) {
    try {
        const int k = j.at("k").get<int>();
        const int n = j.at("n").get<int>();
        if (k < 0 || n < 0) throw std::invalid_argument("negative polynomial dimensions");
        MultivarPolynomial p(k, n);
        for (const auto& term : j.at("terms")) {
            const auto& rows = term.at("exp");
            if (rows.size() != static_cast<std::size_t>(k))
                throw std::invalid_argument("term exponent has wrong number of rows");
            MultivarPolynomial::Key key;
            for (const auto& row : rows) {
                if (row.size() != static_cast<std::size_t>(n))
                    throw std::invalid_argument("term exponent row has wrong length");
                for (const auto& e : row) key.push_back(e.get<std::uint32_t>());
            }
            BigInt c;
            if (c.set_str(term.at("coef").get<std::string>(), 10) != 0)
                throw std::invalid_argument("coefficient is not a decimal integer");
            p.add_term(key, c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string to_csv(const MultivarPolynomial& p) {
    std::string out;
    for (int i = 0; i < p.k(); ++i)
        for (int j = 0; j < p.n(); ++j)
            out += "q" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + ",";
    out += "coef\n";
    for (const auto& [flat, c] : p.terms()) {
        for (auto e : flat) out += std::to_string(e) + ",";
        out += c.get_str() + "\n";
    }
    return out;
}

}  // namespace mmahon
