#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "mmahon/distributions.hpp"
#include "mmahon/kronecker.hpp"
#include "suites.hpp"

namespace mmahon::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Config {
    std::uint64_t budget = 100'000'000;
    std::string cache_path;
    std::string format = "text";
    std::uint64_t seed = 0;

    Budget budget_guard() const { return Budget{budget}; }
    Format output() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::text;
    }
};

/// Raised when a verification or cross-check fails; maps to exit code 1.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Multipartition parse_shapes(const std::vector<std::string>& texts) {
    Multipartition shapes;
    for (const auto& t : texts) shapes.push_back(Partition::parse(t));
    if (shapes.empty()) throw std::invalid_argument("no shapes given");
    for (const auto& s : shapes)
        if (s.size() != shapes.front().size() || s.empty())
            throw std::invalid_argument("shapes must be nonempty partitions of the same n");
    return shapes;
}

std::vector<DescentSet> parse_profile(int n, int k, const std::string& text) {
    std::vector<DescentSet> profile;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(';', start);
        profile.push_back(DescentSet::parse(n, text.substr(start, end - start)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (static_cast<int>(profile.size()) != k)
        throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " components, expected " +
                                    std::to_string(k));
    return profile;
}

KroneckerTable open_cache(const std::string& path, int n) {
    if (path.empty() || !std::filesystem::exists(path)) return KroneckerTable(n);
    auto table = load_table(path);
    if (n != 0 && table.n() != n)
        throw std::invalid_argument("cache " + path + " holds n=" + std::to_string(table.n()) + ", not n=" +
                                    std::to_string(n));
    return table;
}

// ---------------------------------------------------------------- kron

struct KronArgs {
    std::vector<std::string> shapes;
    std::string oracle = "recursion";
    bool both = false;
    bool decompose = false;
};

void cmd_kron(const KronArgs& a, const Config& cfg, std::ostream& out) {
    const auto shapes = parse_shapes(a.shapes);
    const int n = shapes.front().size();
    const bool use_character = a.oracle == "character";
    KroneckerRecursion engine(open_cache(cfg.cache_path, n), cfg.budget_guard());
    KroneckerTable extra = engine.table();

    auto compute = [&](const Multipartition& key) -> BigInt {
        if (!use_character && !a.both) return engine.value(key);
        const BigInt ch = kronecker_character(key);
        if (a.both) {
            const BigInt rec = engine.value(key);
            if (rec != ch)
                throw CheckFailed("oracles disagree at " + to_string(key) + ": recursion " + rec.get_str() +
                                  ", characters " + ch.get_str());
        }
        if (!extra.find(key)) extra.insert(key, ch, Provenance::character);
        return ch;
    };

    Json j;
    if (a.decompose) {
        if (shapes.size() != 2) throw std::invalid_argument("--decompose takes exactly two shapes");
        std::string line;
        Json parts = Json::array();
        for (const auto& rho : partitions_of(n)) {
            const BigInt c = compute({shapes[0], shapes[1], rho});
            if (c == 0) continue;
            line += (line.empty() ? "" : " ") + ("(" + rho.to_string() + "):" + c.get_str());
            parts.push_back(Json{{"shape", rho.parts()}, {"value", c.get_str()}});
        }
        j["decomposition"] = std::move(parts);
        if (cfg.output() == Format::text) out << line << "\n";
    } else {
        const BigInt d = compute(shapes);
        j["shapes"] = Json::array();
        for (const auto& s : shapes) j["shapes"].push_back(s.parts());
        j["value"] = d.get_str();
        if (cfg.output() == Format::text) out << d.get_str() << "\n";
    }
    if (cfg.output() != Format::text) {
        j["oracle"] = a.both ? "both" : a.oracle;
        out << j.dump(2) << "\n";
    }

    if (!cfg.cache_path.empty()) {
        KroneckerTable merged = engine.table();
        for (const auto& [key, e] : extra.entries())
            if (!merged.find(key)) merged.insert(key, e.value, e.provenance);
        save_table(merged, cfg.cache_path);
    }
}

// ---------------------------------------------------------------- dist

struct DistArgs {
    int n = 0;
    int k = 0;
    bool coarse = false;
    std::string coeff;
};

void cmd_dist(const DistArgs& a, const Config& cfg, std::ostream& out) {
    if (a.n < 1 || a.k < 1) throw std::invalid_argument("n and k must be at least 1");
    const auto w = refined_multimahonian(a.n, a.k, cfg.budget_guard());
    if (!a.coeff.empty()) {
        const auto profile = parse_profile(a.n, a.k, a.coeff);
        const BigInt c = w.coefficient(profile_exponent(a.n, profile));
        if (cfg.output() == Format::json)
            out << Json{{"profile", a.coeff}, {"coefficient", c.get_str()}}.dump(2) << "\n";
        else
            out << c.get_str() << "\n";
        return;
    }
    const auto p = a.coarse ? specialize_coarse(w) : w;
    switch (cfg.output()) {
        case Format::text: out << p.to_string() << "\n"; break;
        case Format::json: out << to_json(p).dump(2) << "\n"; break;
        case Format::csv: out << to_csv(p); break;
    }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    int n = 0;
    int k = 0;
    std::uint32_t cap = 2;
    std::size_t samples = 0;
};

const std::map<std::string, std::function<suites::SuiteResult(const suites::SuiteOptions&)>>& suite_table() {
    static const std::map<std::string, std::function<suites::SuiteResult(const suites::SuiteOptions&)>> table{
        {"macmahon", suites::macmahon}, {"ggen", suites::ggen},   {"parpar", suites::parpar},
        {"sym", suites::sym},           {"dcac", suites::dcac},   {"oracle", suites::oracle},
        {"rs", suites::rs},             {"main", suites::main_theorem}, {"uiop", suites::uiop},
        {"conj", suites::conj},         {"classical", suites::classical},
    };
    return table;
}

int cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out) {
    const auto& table = suite_table();
    const auto it = table.find(a.suite);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + a.suite + "'");
    suites::SuiteOptions o;
    o.n = a.n;
    o.k = a.k;
    o.cap = a.cap;
    o.samples = a.samples;
    o.seed = cfg.seed;
    o.budget = cfg.budget_guard();
    const auto result = it->second(o);
    if (cfg.output() == Format::json) {
        Json j;
        j["suite"] = a.suite;
        j["n"] = a.n;
        j["k"] = a.k;
        j["status"] = result.passed ? "PASS" : "FAIL";
        j["report"] = result.json;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& line : result.lines) out << line << "\n";
        out << (result.passed ? "PASS" : "FAIL") << "\n";
    }
    return result.passed ? ExitCode::ok : ExitCode::verification_failed;
}

// ---------------------------------------------------------------- cache

struct CacheArgs {
    std::string action;
    std::string file;
    int n = 0;
    int k = 0;
};

void cmd_cache(const CacheArgs& a, const Config& cfg, std::ostream& out) {
    if (cfg.cache_path.empty()) throw std::invalid_argument("cache commands need --cache PATH");
    if (a.action == "stats") {
        const auto table = open_cache(cfg.cache_path, 0);
        std::size_t recursion = 0;
        for (const auto& [key, e] : table.entries()) recursion += e.provenance == Provenance::recursion;
        if (cfg.output() == Format::json) {
            out << Json{{"n", table.n()},
                        {"entries", table.size()},
                        {"recursion", recursion},
                        {"character", table.size() - recursion}}
                       .dump(2)
                << "\n";
        } else {
            out << table.size() << " entries";
            if (table.size() > 0)
                out << " (n=" << table.n() << ", " << recursion << " recursion, " << table.size() - recursion
                    << " character)";
            out << "\n";
        }
    } else if (a.action == "export") {
        if (a.file.empty()) throw std::invalid_argument("export needs a destination file");
        if (!std::filesystem::exists(cfg.cache_path)) throw std::invalid_argument("no cache at " + cfg.cache_path);
        const auto table = load_table(cfg.cache_path);
        save_table(table, a.file);
        out << "exported " << table.size() << " entries to " << a.file << "\n";
    } else if (a.action == "import") {
        if (a.file.empty()) throw std::invalid_argument("import needs a source file");
        const auto incoming = load_table(a.file);
        auto table = open_cache(cfg.cache_path, incoming.n());
        for (const auto& [key, e] : incoming.entries()) table.insert(key, e.value, e.provenance);
        save_table(table, cfg.cache_path);
        out << "imported " << incoming.size() << " entries, cache holds " << table.size() << "\n";
    } else if (a.action == "fill") {
        if (a.n < 1 || a.k < 1) throw std::invalid_argument("fill needs n and k");
        KroneckerRecursion engine(open_cache(cfg.cache_path, a.n), cfg.budget_guard());
        engine.fill_all(a.k);
        save_table(engine.table(), cfg.cache_path);
        out << "cache holds " << engine.table().size() << " entries\n";
    } else {
        throw std::invalid_argument("unknown cache action '" + a.action + "'");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kronecker coefficients and multimahonian distributions by descent-class counting", "mmahon"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--budget", cfg.budget, "maximum enumeration steps")->check(CLI::PositiveNumber);
    app.add_option("--cache", cfg.cache_path, "persistent Kronecker cache (JSON)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "seed for sampled sweeps");

    auto add_common = [&](CLI::App* sub) {
        // accept the global flags after the subcommand too
        sub->fallthrough();
    };

    KronArgs kron;
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient of the given shapes");
    kron_cmd->add_option("shapes", kron.shapes, "partitions such as 3,1")->required();
    kron_cmd->add_option("--oracle", kron.oracle)->check(CLI::IsMember({"recursion", "character"}));
    kron_cmd->add_flag("--both", kron.both, "cross-check recursion against characters");
    kron_cmd->add_flag("--decompose", kron.decompose, "decompose the tensor product of two shapes");
    add_common(kron_cmd);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "refined multimahonian distribution");
    dist_cmd->add_option("n", dist.n)->required();
    dist_cmd->add_option("k", dist.k)->required();
    dist_cmd->add_flag("--coarse", dist.coarse, "specialize Q_i to a single variable per block");
    dist_cmd->add_option("--coeff", dist.coeff, "descent profile such as {3};{2};{2,3}");
    add_common(dist_cmd);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify.suite)->required();
    verify_cmd->add_option("n", verify.n)->required();
    verify_cmd->add_option("k", verify.k);
    verify_cmd->add_option("--cap", verify.cap, "exponent window");
    verify_cmd->add_option("--samples", verify.samples, "profiles to sample (0 = all)");
    add_common(verify_cmd);

    CacheArgs cache;
    auto* cache_cmd = app.add_subcommand("cache", "inspect or move the Kronecker cache");
    cache_cmd->add_option("action", cache.action)->required()->check(
        CLI::IsMember({"export", "import", "stats", "fill"}));
    cache_cmd->add_option("file", cache.file);
    cache_cmd->add_option("--n", cache.n);
    cache_cmd->add_option("--k", cache.k);
    add_common(cache_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage_error;
    }

    try {
        if (kron_cmd->parsed()) cmd_kron(kron, cfg, out);
        else if (dist_cmd->parsed()) cmd_dist(dist, cfg, out);
        else if (verify_cmd->parsed()) return cmd_verify(verify, cfg, out);
        else if (cache_cmd->parsed()) cmd_cache(cache, cfg, out);
        return ExitCode::ok;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return ExitCode::budget_exceeded;
    } catch (const CheckFailed& e) {
        err << "FAIL: " << e.what() << "\n";
        return ExitCode::verification_failed;
    } catch (const CacheError& e) {
        err << "invalid cache: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return ExitCode::verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    }
}

}  // namespace mmahon::cli
