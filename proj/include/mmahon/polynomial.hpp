#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmahon/common.hpp"
#include "mmahon/partition.hpp"

namespace mmahon {

/// k×n matrix of exponents of the variables q[i][j], flattened row-major.
class ExponentMatrix {
public:
    ExponentMatrix() = default;
    ExponentMatrix(int k, int n) : k_(k), n_(n), entries_(static_cast<std::size_t>(k * n), 0) {}
    ExponentMatrix(int k, int n, std::vector<std::uint32_t> flat);
    /// Row `block` carries the parts of the partition, remaining rows zero.
    static ExponentMatrix from_partition(int k, int n, int block, const Partition& p);
    /// Row i carries the parts of m[i].
    static ExponentMatrix from_multipartition(int n, const Multipartition& m);

    int k() const { return k_; }
    int n() const { return n_; }
    std::uint32_t operator()(int i, int j) const { return entries_[index(i, j)]; }
    std::uint32_t& operator()(int i, int j) { return entries_[index(i, j)]; }
    std::span<const std::uint32_t> flat() const { return entries_; }
    std::uint32_t max_entry() const;

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

    int k_ = 0;
    int n_ = 0;
    std::vector<std::uint32_t> entries_;
};

/// Bound on every exponent entry for truncated series arithmetic.
struct Window {
    std::uint32_t cap = 0;
};

/// Sparse polynomial with exact integer coefficients in the k·n variables
/// q[i][j] (0-based i < k, j < n). Terms are keyed by the flattened exponent
/// vector and kept in lexicographic order; zero coefficients are never stored.
class MultivarPolynomial {
public:
    using Key = std::vector<std::uint32_t>;
    using TermMap = std::map<Key, BigInt>;

    MultivarPolynomial() = default;
    MultivarPolynomial(int k, int n) : k_(k), n_(n) {}

    static MultivarPolynomial constant(int k, int n, const BigInt& c);
    static MultivarPolynomial monomial(const ExponentMatrix& e, const BigInt& c = 1);

    int k() const { return k_; }
    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// 0 when the monomial is absent.
    BigInt coefficient(const ExponentMatrix& e) const;
    BigInt coefficient_sum() const;
    bool nonnegative() const;

    /// Adds c·q^e in place.
    void add_term(const ExponentMatrix& e, const BigInt& c);
    void add_term(const Key& flat, const BigInt& c);

    MultivarPolynomial& operator+=(const MultivarPolynomial& other);
    MultivarPolynomial& operator-=(const MultivarPolynomial& other);

    friend MultivarPolynomial operator+(MultivarPolynomial a, const MultivarPolynomial& b) { return a += b; }
    friend MultivarPolynomial operator-(MultivarPolynomial a, const MultivarPolynomial& b) { return a -= b; }
    friend bool operator==(const MultivarPolynomial&, const MultivarPolynomial&) = default;

    /// Human-readable form, e.g. "1 + q[1,1]*q[2,1]^2" (1-based indices).
    std::string to_string() const;

private:
    void check_compatible(const MultivarPolynomial& other) const;

    int k_ = 0;
    int n_ = 0;
    TermMap terms_;
};

MultivarPolynomial add(const MultivarPolynomial& a, const MultivarPolynomial& b);
MultivarPolynomial mul(const MultivarPolynomial& a, const MultivarPolynomial& b);
/// Product with every term having some exponent above `w.cap` discarded.
MultivarPolynomial mul_windowed(const MultivarPolynomial& a, const MultivarPolynomial& b, Window w);
/// Drops terms with any exponent above the cap.
MultivarPolynomial truncate(const MultivarPolynomial& p, Window w);
BigInt coefficient(const MultivarPolynomial& p, const ExponentMatrix& e);

/// Substitutes q[i][j] -> q[i]; the result has k rows and a single column.
MultivarPolynomial specialize_coarse(const MultivarPolynomial& p);

/// {"k":…, "n":…, "terms":[{"exp":[[…],…], "coef":"…"}…]} in term order.
nlohmann::ordered_json to_json(const MultivarPolynomial& p);
/// Throws std::invalid_argument on malformed input.
MultivarPolynomial polynomial_from_json(const nlohmann::ordered_json& j);
/// Header "q1_1,...,qk_n,coef" then one row per term.
std::string to_csv(const MultivarPolynomial& p);

}  // namespace mmahon
