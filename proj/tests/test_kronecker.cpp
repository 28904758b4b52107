#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "mmahon/kronecker.hpp"
#include "mmahon/tableau.hpp"
#include "mmahon/tuples.hpp"

using namespace mmahon;

namespace {

Multipartition key(std::initializer_list<const char*> shapes) {
    Multipartition m;
    for (const char* s : shapes) m.push_back(Partition::parse(s));
    return m;
}

}  // namespace

TEST_CASE("character values") {
    CHECK(character_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character_value(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character_value(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character_value(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    CHECK(character_value(Partition({3, 1}), Partition({2, 2})) == -1);
    CHECK_THROWS_AS(character_value(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({2, 2})) == 3);
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
}

TEST_CASE("character table orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const auto& table = character_table(n);
        const auto& labels = table.labels();
        BigInt classes = 0;
        for (const auto& rho : labels) classes += table.class_size(rho);
        CHECK(classes == factorial(n));
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        for (const auto& a : labels) {
            CHECK(table.value(a, Partition(ones)) == dimension(a));
            for (const auto& b : labels) {
                BigInt s = 0;
                for (const auto& rho : labels) s += table.class_size(rho) * table.value(a, rho) * table.value(b, rho);
                CHECK(s == (a == b ? BigInt(static_cast<unsigned long>(factorial(n))) : BigInt(0)));
            }
        }
    }
}

TEST_CASE("worked example") {
    KroneckerRecursion engine(4);
    CHECK(engine.value(key({"3,1", "2,2", "2,1,1"})) == 1);
    CHECK(engine.value(key({"3,1", "3,1", "2,1,1"})) == 1);
    CHECK(count_tuples_with_descents(4, std::vector{DescentSet(4, {3}), DescentSet(4, {2}), DescentSet(4, {2, 3})}) == 2);
    CHECK(kronecker_character(key({"3,1", "2,2", "2,1,1"})) == 1);
    CHECK(engine.value(key({"4", "2,2"})) == 0);
}

TEST_CASE("recursion equals characters") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            KroneckerRecursion engine(n);
            for (const auto& m : canonical_keys(n, k)) REQUIRE(engine.value(m) == kronecker_character(m));
        }
}

TEST_CASE("symmetry in the arguments") {
    KroneckerRecursion engine(4);
    for (const auto& m : all_keys(4, 3)) CHECK(engine.value(m) == engine.value(canonical_key(m)));
    CHECK(canonical_key(key({"2,1,1", "4", "3,1"})) == key({"4", "3,1", "2,1,1"}));
}

TEST_CASE("classical cases") {
    for (int n = 1; n <= 5; ++n) {
        KroneckerRecursion engine(n);
        const auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(engine.value({a}) == (a == Partition({n}) ? 1 : 0));
            for (const auto& b : ps) {
                CHECK(engine.value({a, b}) == (a == b ? 1 : 0));
                // tensoring with the trivial and sign representations
                CHECK(engine.value({a, b, Partition({n})}) == (a == b ? 1 : 0));
                CHECK(engine.value({a, b, Partition({n}).conjugate()}) == (a == b.conjugate() ? 1 : 0));
            }
        }
    }
}

TEST_CASE("tensor decomposition") {
    KroneckerRecursion engine(3);
    const auto d = tensor_decompose(Partition({2, 1}), Partition({2, 1}), engine);
    REQUIRE(d.size() == 3);
    for (const auto& [rho, c] : d) CHECK(c == 1);

    KroneckerRecursion engine5(5);
    for (const auto& a : partitions_of(5))
        for (const auto& b : partitions_of(5)) {
            BigInt total = 0;
            for (const auto& [rho, c] : tensor_decompose(a, b, engine5)) total += c * dimension(rho);
            CHECK(total == dimension(a) * dimension(b));
        }
}

TEST_CASE("keys") {
    CHECK(canonical_keys(3, 3).size() == 10);
    CHECK(all_keys(3, 3).size() == 27);
    CHECK(canonical_keys(5, 3).size() == 84);
    CHECK(canonical_keys(4, 2).front() == key({"4", "4"}));
    CHECK_THROWS_AS(KroneckerRecursion(3).value(key({"2,1", "3,1"})), std::invalid_argument);
}

TEST_CASE("table round trip and validation") {
    KroneckerRecursion engine(4);
    engine.fill_all(3);
    const auto& table = engine.table();
    CHECK(table.size() == canonical_keys(4, 3).size());
    const auto j = table.to_json();
    CHECK(KroneckerTable::from_json(j) == table);
    CHECK(KroneckerTable::from_json(nlohmann::ordered_json::parse(j.dump())) == table);

    auto bad = j;
    bad["entries"][3]["value"] = "-1";
    try {
        (void)KroneckerTable::from_json(bad);
        FAIL("negative value accepted");
    } catch (const CacheError& e) {
        CHECK(e.entry() == 3);
        CHECK(std::string(e.what()).rfind("entry 3:", 0) == 0);
    }

    auto dup = j;
    dup["entries"][5] = dup["entries"][2];
    CHECK_THROWS_AS(KroneckerTable::from_json(dup), CacheError);

    auto wrong_n = j;
    wrong_n["entries"][0]["shapes"] = nlohmann::ordered_json::parse("[[3],[2,1]]");
    CHECK_THROWS_AS(KroneckerTable::from_json(wrong_n), CacheError);

    auto prov = j;
    prov["entries"][1]["provenance"] = "guess";
    CHECK_THROWS_AS(KroneckerTable::from_json(prov), CacheError);

    CHECK_THROWS_AS(KroneckerTable::from_json(nlohmann::ordered_json::parse("{}")), CacheError);
    CHECK_THROWS_AS(KroneckerTable(4).insert(key({"4"}), -2, Provenance::recursion), std::invalid_argument);
}

TEST_CASE("file persistence and warm start") {
    const auto path = (std::filesystem::temp_directory_path() / "mmahon_test_cache.json").string();
    KroneckerRecursion cold(4);
    cold.fill_all(3);
    save_table(cold.table(), path);
    const auto loaded = load_table(path);
    CHECK(loaded == cold.table());

    KroneckerRecursion warm(loaded);
    CHECK(warm.value(key({"3,1", "2,2", "2,1,1"})) == 1);
    CHECK(warm.descent_count_evaluations() == 0);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_table(path), CacheError);
}

TEST_CASE("character entries are not trusted by the recursion") {
    KroneckerTable table(3);
    table.insert(key({"2,1", "2,1", "2,1"}), 7, Provenance::character);
    KroneckerRecursion engine(table);
    CHECK(engine.value(key({"2,1", "2,1", "2,1"})) == 1);
}
