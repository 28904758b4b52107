#include <doctest.h>

#include <random>

#include "mmahon/polynomial.hpp"

using namespace mmahon;

namespace {

MultivarPolynomial random_poly(std::mt19937& rng, int k, int n, int terms, std::uint32_t max_exp) {
    MultivarPolynomial p(k, n);
    for (int t = 0; t < terms; ++t) {
        ExponentMatrix e(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) e(i, j) = rng() % (max_exp + 1);
        p.add_term(e, BigInt(static_cast<long>(rng() % 21) - 10));
    }
    return p;
}

ExponentMatrix exps(int k, int n, std::vector<std::uint32_t> flat) { return ExponentMatrix(k, n, std::move(flat)); }

}  // namespace

TEST_CASE("construction and coefficients") {
    const auto one = MultivarPolynomial::constant(2, 1, 1);
    CHECK(one.term_count() == 1);
    CHECK(one.coefficient(ExponentMatrix(2, 1)) == 1);
    CHECK(MultivarPolynomial::constant(2, 1, 0).is_zero());

    auto p = one + MultivarPolynomial::monomial(exps(2, 1, {1, 1}));
    CHECK(p.to_string() == "1 + q[1,1]*q[2,1]");
    CHECK(p.coefficient_sum() == 2);
    CHECK(coefficient(p, exps(2, 1, {1, 0})) == 0);

    p.add_term(exps(2, 1, {1, 1}), -1);
    CHECK(p == one);
    CHECK(p.nonnegative());
    p.add_term(exps(2, 1, {0, 2}), -3);
    CHECK_FALSE(p.nonnegative());
    CHECK(p.to_string() == "1 - 3*q[2,1]^2");
}

TEST_CASE("exponent matrices from partitions") {
    const auto e = ExponentMatrix::from_partition(3, 4, 1, Partition({3, 1}));
    CHECK(e(1, 0) == 3);
    CHECK(e(1, 1) == 1);
    CHECK(e(0, 0) == 0);
    CHECK(e.max_entry() == 3);
    const auto m = ExponentMatrix::from_multipartition(3, {Partition({2}), Partition({1, 1, 1})});
    CHECK(m.k() == 2);
    CHECK(m(1, 2) == 1);
    CHECK_THROWS_AS(ExponentMatrix::from_partition(1, 2, 0, Partition({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("mismatched shapes are rejected") {
    CHECK_THROWS_AS(MultivarPolynomial(1, 2) + MultivarPolynomial(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(mul(MultivarPolynomial(1, 2), MultivarPolynomial(1, 3)), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(rng, 2, 2, 6, 3);
        const auto b = random_poly(rng, 2, 2, 6, 3);
        const auto c = random_poly(rng, 2, 2, 6, 3);
        const auto zero = MultivarPolynomial(2, 2);
        const auto one = MultivarPolynomial::constant(2, 2, 1);
        CHECK(a + b == b + a);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(mul(a, one) == a);
        CHECK(mul(a, zero).is_zero());
        CHECK((a - a).is_zero());
        CHECK(add(a, b) - b == a);
    }
}

TEST_CASE("windowed multiplication equals truncated multiplication") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(rng, 2, 3, 8, 4);
        const auto b = random_poly(rng, 2, 3, 8, 4);
        for (std::uint32_t cap = 0; cap <= 5; ++cap) {
            const Window w{cap};
            CHECK(mul_windowed(a, b, w) == truncate(mul(a, b), w));
            CHECK(mul_windowed(truncate(a, w), truncate(b, w), w) == truncate(mul(a, b), w));
        }
    }
}

TEST_CASE("coarse specialization") {
    MultivarPolynomial p(2, 2);
    p.add_term(exps(2, 2, {1, 0, 0, 0}), 2);
    p.add_term(exps(2, 2, {0, 1, 0, 0}), 3);
    p.add_term(exps(2, 2, {1, 1, 2, 0}), 1);
    const auto c = specialize_coarse(p);
    CHECK(c.k() == 2);
    CHECK(c.n() == 1);
    CHECK(c.coefficient(exps(2, 1, {1, 0})) == 5);
    CHECK(c.coefficient(exps(2, 1, {2, 2})) == 1);
    CHECK(c.coefficient_sum() == p.coefficient_sum());
}

TEST_CASE("json and csv round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(rng, 3, 2, 10, 3);
        p.add_term(exps(3, 2, {9, 9, 9, 9, 9, 9}), BigInt("123456789012345678901234567890"));
        const auto j = to_json(p);
        CHECK(polynomial_from_json(j) == p);
        CHECK(polynomial_from_json(nlohmann::ordered_json::parse(j.dump())) == p);
    }
    MultivarPolynomial q(2, 1);
    q.add_term(exps(2, 1, {0, 0}), 1);
    q.add_term(exps(2, 1, {1, 1}), 1);
    CHECK(to_csv(q) == "q1_1,q2_1,coef\n0,0,1\n1,1,1\n");
    CHECK(to_json(q).dump() ==
          R"({"k":2,"n":1,"terms":[{"exp":[[0],[0]],"coef":"1"},{"exp":[[1],[1]],"coef":"1"}]})");
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::ordered_json::parse(R"({"k":1})")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::ordered_json::parse(
                        R"({"k":1,"n":1,"terms":[{"exp":[[0,1]],"coef":"1"}]})")),
                    std::invalid_argument);
}
