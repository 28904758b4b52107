#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "mmahon/kronecker.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mmahon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("mmahon_cli_" + name);
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("kron") {
    auto r = run({"kron", "3,1", "2,2", "2,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(run({"kron", "4", "2,2"}).out == "0\n");
    CHECK(run({"kron", "3,1", "2,2", "2,1,1", "--oracle", "character"}).out == "1\n");
    CHECK(run({"kron", "3,1", "2,2", "2,1,1", "--both"}).code == 0);
    CHECK(run({"kron", "2,1", "2,1", "--decompose"}).out == "(3):1 (2,1):1 (1,1,1):1\n");
    CHECK(run({"kron", "2,2", "2,2", "--decompose"}).out == "(4):1 (2,2):1 (1,1,1,1):1\n");
}

TEST_CASE("kron errors") {
    CHECK(run({"kron", "3,1", "2,2,1"}).code == 2);
    CHECK(run({"kron", "3,x"}).code == 2);
    CHECK(run({"kron", "2,3"}).code == 2);
    CHECK(run({"kron", "3", "--oracle", "magic"}).code == 2);
    CHECK(run({"kron", "2,1", "2,1", "2,1", "--decompose"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("dist") {
    CHECK(run({"dist", "2", "2"}).out == "1 + q[1,1]*q[2,1]\n");
    CHECK(run({"dist", "3", "1"}).out == "1\n");
    CHECK(run({"dist", "4", "3", "--coeff", "{3};{2};{2,3}"}).out == "2\n");
    CHECK(run({"dist", "4", "3", "--coeff", "{3};{2}"}).code == 2);
    CHECK(run({"dist", "2", "2", "--format", "csv"}).out == "q1_1,q1_2,q2_1,q2_2,coef\n0,0,0,0,1\n1,0,1,0,1\n");
    CHECK(run({"dist", "3", "2", "--coarse"}).out ==
          "1 + q[1,1]*q[2,1] + q[1,1]*q[2,1]^2 + q[1,1]^2*q[2,1] + q[1,1]^2*q[2,1]^2 + q[1,1]^3*q[2,1]^3\n");
    const auto a = run({"dist", "3", "3", "--format", "json"});
    const auto b = run({"dist", "3", "3", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::ordered_json::parse(a.out)["k"] == 3);
}

TEST_CASE("budget exit code") {
    const auto r = run({"dist", "7", "3", "--budget", "1000"});
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
    CHECK(run({"verify", "sym", "6", "4", "--budget", "100"}).code == 3);
    CHECK(run({"dist", "2", "2", "--budget", "0"}).code == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "macmahon", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
    CHECK(run({"verify", "ggen", "2", "2", "--cap", "2"}).code == 0);
    CHECK(run({"verify", "parpar", "2", "2", "--cap", "2"}).code == 0);
    CHECK(run({"verify", "oracle", "4", "3"}).code == 0);
    CHECK(run({"verify", "sym", "3", "3"}).code == 0);
    CHECK(run({"verify", "sym", "4", "3", "--samples", "10", "--seed", "3"}).code == 0);
    CHECK(run({"verify", "dcac", "3", "3"}).code == 0);
    CHECK(run({"verify", "rs", "5"}).code == 0);
    CHECK(run({"verify", "main", "3", "3"}).code == 0);
    CHECK(run({"verify", "uiop", "6"}).code == 0);
    CHECK(run({"verify", "conj", "4"}).code == 0);
    CHECK(run({"verify", "classical", "4"}).code == 0);
    CHECK(run({"verify", "nonsense", "4"}).code == 2);
    CHECK(run({"verify", "sym", "4"}).code == 2);

    const auto j1 = run({"verify", "dcac", "3", "2", "--format", "json"});
    const auto j2 = run({"verify", "dcac", "3", "2", "--format", "json"});
    CHECK(j1.out == j2.out);
    CHECK(nlohmann::ordered_json::parse(j1.out)["status"] == "PASS");
}

TEST_CASE("cache round trip") {
    const auto cache = temp_path("cache.json");
    const auto exported = temp_path("exported.json");
    const auto second = temp_path("second.json");

    CHECK(run({"cache", "stats", "--cache", cache}).out == "0 entries\n");
    CHECK(run({"kron", "3,1", "2,2", "2,1,1", "--cache", cache}).out == "1\n");
    CHECK(run({"cache", "stats", "--cache", cache}).code == 0);
    CHECK(run({"cache", "fill", "--n", "4", "--k", "3", "--cache", cache}).code == 0);
    CHECK(run({"cache", "stats", "--cache", cache}).out.rfind("35 entries", 0) == 0);

    CHECK(run({"cache", "export", exported, "--cache", cache}).code == 0);
    CHECK(run({"cache", "import", exported, "--cache", second}).code == 0);
    CHECK(mmahon::load_table(second) == mmahon::load_table(cache));

    // warm start answers from the file
    CHECK(run({"kron", "3,1", "3,1", "2,1,1", "--cache", second}).out == "1\n");
    CHECK(run({"kron", "2,1", "2,1", "--cache", second}).code == 2);

    std::filesystem::remove(cache);
    std::filesystem::remove(exported);
    std::filesystem::remove(second);
}

TEST_CASE("corrupt cache files are rejected with the entry index") {
    const auto cache = temp_path("target.json");
    auto r = run({"cache", "import", std::string(FIXTURE_DIR) + "/negative_entry.json", "--cache", cache});
    CHECK(r.code == 2);
    CHECK(r.err.find("entry 2") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(cache));

    r = run({"cache", "import", std::string(FIXTURE_DIR) + "/duplicate_entry.json", "--cache", cache});
    CHECK(r.code == 2);
    CHECK(r.err.find("entry 1") != std::string::npos);

    CHECK(run({"kron", "3", "--cache", std::string(FIXTURE_DIR) + "/negative_entry.json"}).code == 2);
}
