#include <doctest.h>

#include <random>
#include <set>

#include "mmahon/permutation.hpp"
#include "mmahon/tuples.hpp"
#include "oracles.hpp"

using namespace mmahon;

TEST_CASE("descent set of 35241") {
    const auto p = Permutation::parse("35241");
    CHECK(descent_set(p) == DescentSet(5, {2, 4}));
    CHECK(descent_set(p).to_string() == "{2,4}");
    CHECK(descent_set(Permutation::identity(6)).count() == 0);
    CHECK(descent_set(Permutation::parse("321")) == DescentSet(3, {1, 2}));
}

TEST_CASE("maj, inv and lambda") {
    const auto p = Permutation::parse("35241");
    const auto s = statistics(p);
    CHECK(s.maj == 6);
    CHECK(s.inv == 7);
    CHECK(oracle::inversions({3, 5, 2, 4, 1}) == 7);
    CHECK(statistics(Permutation::identity(4)).maj == 0);
    CHECK(statistics(Permutation::identity(4)).inv == 0);

    CHECK(lambda_of_permutation(p) == Partition({2, 2, 1, 1}));
    CHECK(lambda_of_permutation(Permutation::identity(5)).empty());
    CHECK(lambda_of_permutation(Permutation::parse("21")) == Partition({1}));
}

TEST_CASE("lambda has size maj and determines the descent set") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : all_permutations(n)) REQUIRE(lambda_of_permutation(p).size() == statistics(p).maj);
        std::set<Partition> seen;
        for (const auto& d : all_descent_sets(n)) CHECK(seen.insert(d.lambda()).second);
    }
}

TEST_CASE("composition convention reproduces the worked triplets") {
    const std::vector<Permutation> a{Permutation::parse("1243"), Permutation::parse("1423"),
                                     Permutation::parse("1432")};
    const std::vector<Permutation> b{Permutation::parse("2341"), Permutation::parse("2413"),
                                     Permutation::parse("2431")};
    const std::vector<Permutation> c{Permutation::parse("1342"), Permutation::parse("1243"),
                                     Permutation::parse("1432")};
    CHECK(product(a).is_identity());
    CHECK(product(b).is_identity());
    CHECK(product(c).is_identity());
    CHECK(oracle::is_identity(oracle::then(oracle::then({2, 3, 4, 1}, {2, 4, 1, 3}), {2, 4, 3, 1})));
}

TEST_CASE("group axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto random_perm = [&] {
            std::vector<int> w(static_cast<std::size_t>(n));
            std::iota(w.begin(), w.end(), 1);
            std::shuffle(w.begin(), w.end(), rng);
            return Permutation(w);
        };
        const auto p = random_perm(), q = random_perm(), r = random_perm();
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
        CHECK(compose(p, Permutation::identity(n)) == p);
    }
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("descent classes") {
    const auto d3 = permutations_with_descent_set(4, DescentSet(4, {3}));
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].to_string() == "1243");
    CHECK(d3[1].to_string() == "1342");
    CHECK(d3[2].to_string() == "2341");

    const auto dec = permutations_with_descent_set(3, DescentSet(3, {1, 2}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].to_string() == "321");

    for (int n = 1; n <= 6; ++n) {
        auto id = permutations_with_descent_set(n, DescentSet(n));
        REQUIRE(id.size() == 1);
        CHECK(id[0].is_identity());
    }
}

TEST_CASE("descent classes agree with filtering S_n and partition it") {
    for (int n = 1; n <= 8; ++n) {
        std::map<std::vector<int>, std::vector<std::vector<int>>> filtered;
        for (const auto& w : oracle::all_words(n)) filtered[oracle::descents(w)].push_back(w);
        std::uint64_t total = 0;
        for (const auto& d : all_descent_sets(n)) {
            const auto cls = permutations_with_descent_set(n, d);
            total += cls.size();
            const auto& expected = filtered[d.elements()];
            REQUIRE(cls.size() == expected.size());
            for (std::size_t i = 0; i < cls.size(); ++i) {
                const auto w = cls[i].word();
                CHECK(std::vector<int>(w.begin(), w.end()) == expected[i]);
            }
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("mahonian polynomials") {
    CHECK(mahonian_polynomial(1, MahonianStat::maj) == std::vector<BigInt>{1});
    CHECK(mahonian_polynomial(3, MahonianStat::maj) == std::vector<BigInt>{1, 2, 2, 1});
    CHECK(mahonian_polynomial(3, MahonianStat::inv) == std::vector<BigInt>{1, 2, 2, 1});
    CHECK(q_factorial(1) == std::vector<BigInt>{1});
    for (int n = 1; n <= 8; ++n) {
        const auto maj = mahonian_polynomial(n, MahonianStat::maj);
        CHECK(maj == mahonian_polynomial(n, MahonianStat::inv));
        CHECK(maj == q_factorial(n));
    }
}

TEST_CASE("serialization and parse errors") {
    CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").to_string() == "10,2,3,4,5,6,7,8,9,1");
    CHECK(DescentSet::parse(4, "{}").count() == 0);
    CHECK(DescentSet::parse(4, "{2,3}") == DescentSet(4, {2, 3}));
    CHECK_THROWS_AS(DescentSet::parse(4, "{4}"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1224"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("descent-restricted tuple counts match full enumeration") {
    CHECK(count_tuples_with_descents(4, std::vector{DescentSet(4, {3}), DescentSet(4, {2}), DescentSet(4, {2, 3})}) == 2);
    CHECK(count_tuples_with_descents(4, std::vector{DescentSet(4, {3}), DescentSet(4, {3}), DescentSet(4, {2, 3})}) == 1);
    CHECK(count_tuples_with_descents(5, std::vector{DescentSet(5), DescentSet(5), DescentSet(5)}) == 1);

    for (int n = 2; n <= 4; ++n) {
        const auto sets = all_descent_sets(n);
        for (const auto& a : sets)
            for (const auto& b : sets)
                for (const auto& c : sets) {
                    const std::vector<DescentSet> profile{a, b, c};
                    const auto expected = oracle::count_with_descents(n, {a.elements(), b.elements(), c.elements()});
                    REQUIRE(count_tuples_with_descents(n, profile) == expected);
                }
    }
}

TEST_CASE("budget guard") {
    std::size_t visited = 0;
    for_each_product_one_tuple(3, 3, Budget{}, [&](auto) { ++visited; });
    CHECK(visited == 36);
    CHECK_THROWS_AS(for_each_product_one_tuple(8, 3, Budget{1000}, [](auto) {}), BudgetExceeded);
}
