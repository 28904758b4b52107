#include "suites.hpp"

#include <set>

#include "mmahon/distributions.hpp"
#include "mmahon/kronecker.hpp"
#include "mmahon/symmetry.hpp"
#include "mmahon/tableau.hpp"

namespace mmahon::suites {

void SuiteResult::record(bool ok, const std::string& what) {
    passed = passed && ok;
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
}

namespace {

std::string nk(const SuiteOptions& o) { return "n=" + std::to_string(o.n) + " k=" + std::to_string(o.k); }

void require_n(const SuiteOptions& o) {
    if (o.n < 1) throw std::invalid_argument("n must be at least 1");
}

void require_nk(const SuiteOptions& o) {
    require_n(o);
    if (o.k < 1) throw std::invalid_argument("k must be at least 1");
}

SuiteResult from_identity(const IdentityReport& r, const std::string& label) {
    SuiteResult out;
    out.record(r.passed, label + ": " + std::to_string(r.monomials_compared) + " monomials compared");
    for (const auto& [exp, lr] : r.mismatches) {
        std::string e;
        for (auto x : exp) e += (e.empty() ? "" : ",") + std::to_string(x);
        out.lines.push_back("  [" + e + "] " + lr.first.get_str() + " != " + lr.second.get_str());
    }
    out.json["status"] = r.passed ? "PASS" : "FAIL";
    out.json["monomials_compared"] = r.monomials_compared;
    out.json["mismatches"] = r.mismatches.size();
    return out;
}

SuiteResult from_symmetry(const SymmetryReport& r, const std::string& label) {
    SuiteResult out;
    out.record(r.passed, label + ": " + std::to_string(r.profiles_checked) + " profiles, " +
                             std::to_string(r.counts_compared) + " counts compared");
    for (const auto& f : r.failures) out.lines.push_back("  " + f);
    out.json = r.to_json();
    return out;
}

}  // namespace

SuiteResult macmahon(const SuiteOptions& o) {
    require_n(o);
    SuiteResult out;
    for (int m = 1; m <= o.n; ++m) {
        const auto maj = mahonian_polynomial(m, MahonianStat::maj);
        const auto inv = mahonian_polynomial(m, MahonianStat::inv);
        const bool ok = maj == inv && maj == q_factorial(m);
        out.record(ok, "macmahon n=" + std::to_string(m) + ": maj = inv = q-factorial");
        out.json[std::to_string(m)] = ok ? "PASS" : "FAIL";
    }
    return out;
}

SuiteResult ggen(const SuiteOptions& o) {
    require_nk(o);
    return from_identity(verify_refined_quotient_identity(o.n, o.k, Window{o.cap}, o.budget),
                         "ggen " + nk(o) + " cap=" + std::to_string(o.cap));
}

SuiteResult parpar(const SuiteOptions& o) {
    require_nk(o);
    return from_identity(verify_multipartite_count(o.n, o.k, o.cap, o.budget),
                         "parpar " + nk(o) + " cap=" + std::to_string(o.cap));
}

SuiteResult sym(const SuiteOptions& o) {
    require_nk(o);
    return from_symmetry(verify_sym(o.n, o.k, o.samples, o.seed, o.budget), "sym " + nk(o));
}

SuiteResult dcac(const SuiteOptions& o) {
    require_nk(o);
    return from_symmetry(verify_dcac(o.n, o.k, o.samples, o.seed, o.budget), "dcac " + nk(o));
}

SuiteResult oracle(const SuiteOptions& o) {
    require_nk(o);
    SuiteResult out;
    KroneckerRecursion engine(o.n, o.budget);
    std::size_t checked = 0;
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    for (const auto& key : canonical_keys(o.n, o.k)) {
        const BigInt a = engine.value(key);
        const BigInt b = kronecker_character(key);
        ++checked;
        if (a != b) {
            out.lines.push_back("  " + to_string(key) + ": recursion " + a.get_str() + ", characters " + b.get_str());
            mismatches.push_back(to_string(key));
            out.passed = false;
        }
    }
    out.lines.insert(out.lines.begin(), std::string(out.passed ? "PASS " : "FAIL ") + "oracle " + nk(o) + ": " +
                                            std::to_string(checked) + " canonical keys, recursion = characters");
    out.json["status"] = out.passed ? "PASS" : "FAIL";
    out.json["keys"] = checked;
    out.json["mismatches"] = std::move(mismatches);
    return out;
}

SuiteResult rs(const SuiteOptions& o) {
    require_n(o);
    SuiteResult out;
    bool shapes = true, des_q = true, des_p = true, inverse_ok = true;
    std::set<std::pair<StandardTableau, StandardTableau>> image;
    for (const auto& s : all_permutations(o.n)) {
        auto [p, q] = rs_correspondence(s);
        shapes = shapes && p.shape() == q.shape();
        des_q = des_q && descent_set(q) == descent_set(s);
        des_p = des_p && descent_set(p) == descent_set(inverse(s));
        inverse_ok = inverse_ok && rs_inverse(p, q) == s;
        image.emplace(std::move(p), std::move(q));
    }
    BigInt pairs = 0;
    for (const auto& mu : partitions_of(o.n)) pairs += dimension(mu) * dimension(mu);
    const bool bijective = BigInt(static_cast<unsigned long>(image.size())) == pairs &&
                           image.size() == factorial(o.n) && inverse_ok;
    const std::string n = "rs n=" + std::to_string(o.n);
    out.record(shapes, n + ": shape(P) = shape(Q)");
    out.record(des_q, n + ": Des(Q) = Des(sigma)");
    out.record(des_p, n + ": Des(P) = Des(sigma^-1)");
    out.record(bijective, n + ": bijection onto " + pairs.get_str() + " same-shape pairs");
    out.json["status"] = out.passed ? "PASS" : "FAIL";
    out.json["permutations"] = factorial(o.n);
    return out;
}

SuiteResult main_theorem(const SuiteOptions& o) {
    require_nk(o);
    SuiteResult out;
    KroneckerRecursion engine(o.n, o.budget);
    const auto lhs = refined_multimahonian(o.n, o.k, o.budget);
    const auto rhs = multimahonian_via_kronecker(o.n, o.k, engine);
    const auto diff = lhs - rhs;
    out.record(diff.is_zero(), "main " + nk(o) + ": " + std::to_string(lhs.term_count()) +
                                   " terms, tuple sum = Kronecker-weighted tableau sum");
    out.json["status"] = out.passed ? "PASS" : "FAIL";
    out.json["terms"] = lhs.term_count();
    out.json["differing_terms"] = diff.term_count();
    return out;
}

SuiteResult uiop(const SuiteOptions& o) {
    require_n(o);
    SuiteResult out;
    for (int m = 1; m <= o.n; ++m) {
        bool unique = true, dominated = true;
        for (const auto& mu : partitions_of(m)) {
            const auto tmu = canonical_tableau(mu);
            int same_shape = 0;
            for (const auto& t : tableaux_with_descent_set(m, descent_set(tmu))) {
                if (t.shape() == mu) {
                    ++same_shape;
                    unique = unique && t == tmu;
                }
                dominated = dominated && dominance_leq(mu, t.shape());
            }
            unique = unique && same_shape == 1;
        }
        out.record(unique && dominated, "uiop n=" + std::to_string(m) +
                                            ": T_mu unique in its shape and class, class shapes dominate mu");
        out.json[std::to_string(m)] = unique && dominated ? "PASS" : "FAIL";
    }
    return out;
}

SuiteResult conj(const SuiteOptions& o) {
    require_n(o);
    SuiteResult out;
    for (int m = 1; m <= o.n; ++m) {
        KroneckerRecursion engine(m, o.budget);
        std::size_t triples = 0;
        bool ok = true;
        for (const auto& key : all_keys(m, 3)) {
            ++triples;
            const Multipartition c{key[0].conjugate(), key[1].conjugate(), key[2]};
            ok = ok && engine.value(c) == engine.value(key);
        }
        out.record(ok, "conj n=" + std::to_string(m) + ": " + std::to_string(triples) + " triples");
        out.json[std::to_string(m)] = ok ? "PASS" : "FAIL";
    }
    return out;
}

SuiteResult classical(const SuiteOptions& o) {
    require_n(o);
    SuiteResult out;
    KroneckerRecursion engine(o.n, o.budget);
    const auto ps = partitions_of(o.n);
    bool k1 = true, k2 = true, dims = true;
    for (const auto& a : ps) {
        k1 = k1 && engine.value({a}) == (a == Partition({o.n}) ? 1 : 0);
        for (const auto& b : ps) {
            k2 = k2 && engine.value({a, b}) == (a == b ? 1 : 0);
            BigInt total = 0;
            for (const auto& [rho, c] : tensor_decompose(a, b, engine)) total += c * dimension(rho);
            dims = dims && total == dimension(a) * dimension(b);
        }
    }
    const std::string n = "classical n=" + std::to_string(o.n);
    out.record(k1, n + ": k=1 gives delta with (n)");
    out.record(k2, n + ": k=2 gives delta");
    out.record(dims, n + ": sum_rho d(a,b,rho) dim rho = dim a dim b");
    out.json["status"] = out.passed ? "PASS" : "FAIL";
    return out;
}

}  // namespace mmahon::suites
