// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "octcode/octcode.hpp"
#include "octcode/report.hpp"
#include "oracles.hpp"

using namespace octcode;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            out_.pass = false;
            if (!out_.detail.empty()) out_.detail += "; ";
            out_.detail += what;
        }
    }
    void note(const std::string& what) { notes_ += (notes_.empty() ? "" : "; ") + what; }
    Outcome done() {
        if (out_.pass) out_.detail = notes_;
        return out_;
    }

private:
    Outcome out_;
    std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

std::string gens(const LinearCode& code) {
    std::string s;
    for (const auto& r : code.generators().rows()) s += (s.empty() ? "" : ",") + r.to_string();
    return s;
}

const ClaimRecord* find_claim(const Analysis& a, const std::string& id) {
    for (const auto& c : a.claims)
        if (c.id == id) return &c;
    return nullptr;
}

AnalysisOptions verify_all() {
    AnalysisOptions o;
    o.covrad = {kAllMetrics.begin(), kAllMetrics.end()};
    o.verify = true;
    return o;
}

Analysis analyze(const FamilySpec& s, AnalysisOptions o = verify_all()) {
    return Analyzer(o).run(build(s), format_family(s), s);
}

// Codes touched by criteria 3 to 9, collected for the ledger sweep.
std::vector<std::pair<std::string, LinearCode>> g_codes;

Outcome gray_isometry() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint8_t a = 0; a < 8; ++a)
        for (std::uint8_t b = 0; b < 8; ++b) {
            const OctVector x{a}, y{b};
            c.expect(distance(x, y, Metric::homogeneous) == hamming_distance(gray_map(x), gray_map(y)),
                     "pair " + std::to_string(a) + "," + std::to_string(b));
        }
    const double t = seconds_since(t0);
    c.expect(t < 1e-3, "took " + secs(t));
    c.note("64 pairs in " + secs(t));
    return c.done();
}

Outcome torsion_structure() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::set<std::string> exact_groups = {"cardinality identity", "torsion cardinality product",
                                                "reduction and torsion inclusions", "second-level derived codes",
                                                "generator construction"};
    std::mt19937 rng(2024);
    std::size_t checks = 0;
    for (int it = 0; it < 200; ++it) {
        const auto code = oracle::random_code(rng, 3, 1, 4);
        const auto rep = structure_report(code);
        for (const auto& chk : rep.checks) {
            if (!exact_groups.count(chk.claimed_by)) continue;
            ++checks;
            c.expect(chk.verdict == CheckVerdict::pass, chk.name + " " + std::string(verdict_name(chk.verdict)) +
                                                            " on " + gens(code));
        }
        for (auto tag : kAllDerivedTags) {
            ++checks;
            c.expect(derive(code, tag).word_set() == derive_by_comprehension(code, tag),
                     std::string(tag_name(tag)) + " mismatch on " + gens(code));
        }
    }
    const double t = seconds_since(t0);
    c.expect(t < 10, "took " + secs(t));
    c.note(std::to_string(checks) + " checks on 200 codes in " + secs(t));
    return c.done();
}

Outcome oracle_agreement() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        const auto code = oracle::random_code(rng, 3, 1, 5);
        g_codes.emplace_back("random#" + std::to_string(it), code);
        for (auto m : kAllMetrics) {
            const unsigned s = covering_radius_scan(code, m), k = covering_radius_coset(code, m);
            c.expect(s == k, std::string(metric_name(m)) + " scan " + std::to_string(s) + " coset " + std::to_string(k) +
                                 " on " + gens(code));
        }
    }
    const double t = seconds_since(t0);
    c.expect(t < 60, "took " + secs(t));
    c.note("50 codes x 4 metrics in " + secs(t));
    return c.done();
}

Outcome repetition_values() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto alpha1 = build(family::Repetition{1, 8});
    const unsigned r = covering_radius_scan(alpha1, Metric::euclidean);
    const double t = seconds_since(t0);
    c.expect(r == 44, "scan r_E(a=1,n=8) = " + std::to_string(r));
    c.expect(t < 30, "scan took " + secs(t));
    c.note("scan r_E(a=1,n=8) = 44 in " + secs(t));

    struct Case {
        unsigned a;
        std::size_t n;
        long long value;
        Verdict verdict;
    };
    for (const auto& k : {Case{1, 8, 44, Verdict::confirmed}, Case{4, 2, 16, Verdict::confirmed},
                          Case{2, 8, 48, Verdict::confirmed}, Case{4, 1, 4, Verdict::refuted}}) {
        const FamilySpec s = family::Repetition{k.a, k.n};
        const auto a = analyze(s);
        g_codes.emplace_back(format_family(s), a.code);
        const auto* claim = find_claim(a, "repetition/r_E");
        const std::string label = "a=" + std::to_string(k.a) + ",n=" + std::to_string(k.n);
        if (!claim) {
            c.expect(false, "no r_E claim for " + label);
            continue;
        }
        c.expect(claim->oracle == k.value, label + ": oracle " + (claim->oracle ? std::to_string(*claim->oracle) : "none"));
        c.expect(claim->verdict == k.verdict, label + ": verdict " + std::string(verdict_name(claim->verdict)));
    }
    return c.done();
}

Outcome simplex_parameters() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        FamilySpec spec;
        std::size_t n;
        std::uint64_t m;
        unsigned d;
    };
    const std::vector<Case> cases = {{family::SimplexAlpha{1}, 8, 8, 16},
                                     {family::SimplexAlpha{2}, 64, 64, 128},
                                     {family::SimplexBeta{2}, 12, 64, 24}};
    for (const auto& k : cases) {
        const auto code = build(k.spec);
        g_codes.emplace_back(format_family(k.spec), code);
        const auto name = format_family(k.spec);
        const auto words = codewords(code);
        unsigned d = ~0u;
        for (const auto& w : words) {
            const unsigned x = weight(w, Metric::homogeneous);
            if (x) d = std::min(d, x);
        }
        c.expect(code.length() == k.n, name + ": n = " + std::to_string(code.length()));
        c.expect(words.size() == k.m, name + ": M = " + std::to_string(words.size()));
        c.expect(d == k.d, name + ": d_HW = " + std::to_string(d));
        // definition checked on all codeword pairs, independent of the generator-row shortcut
        bool orthogonal = true;
        for (const auto& u : words) {
            for (const auto& v : words)
                if (inner_product(u, v).value() != 0) {
                    orthogonal = false;
                    break;
                }
            if (!orthogonal) break;
        }
        if (!orthogonal) {
            const auto& g = code.generators().rows().front();
            c.expect(false, name + " is not self-orthogonal: generator " + g.to_string() + " has <g,g> = " +
                                std::to_string(inner_product(g, g).value()) + " mod 8");
        }
    }
    const double t = seconds_since(t0);
    c.expect(t < 5, "took " + secs(t));
    c.note("enumerated in " + secs(t));
    return c.done();
}

Outcome octacode() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const FamilySpec s = family::Octacode{};
    const auto code = build(s);
    g_codes.emplace_back("octacode", code);
    c.expect(is_self_dual(code), "not self-dual");
    const unsigned r = covering_radius_coset(code, Metric::homogeneous);
    const double t = seconds_since(t0);
    c.expect(t < 120, "coset oracle took " + secs(t));
    AnalysisOptions o;
    o.covrad = {Metric::homogeneous};
    o.verify = true;
    const auto a = analyze(s, o);
    const auto* claim = find_claim(a, "octacode/r_HW");
    c.expect(claim && claim->oracle == static_cast<long long>(r) && claim->verdict != Verdict::untested,
             "claim r_HW >= 6 has no oracle verdict");
    const auto lb = sphere_covering_lower(code, Metric::homogeneous, SphereForm::sound);
    c.expect(lb == 3u, "sound sphere bound " + (lb ? std::to_string(*lb) : std::string("none")));
    c.expect(lb && *lb <= r, "sound sphere bound above exact value");
    if (claim)
        c.note("r_HW = " + std::to_string(r) + " in " + secs(t) + ", claim r_HW >= 6 " +
               std::string(verdict_name(claim->verdict)) + ", sound bound 3");
    return c.done();
}

Outcome sphere_arithmetic() {
    Check c;
    const auto v = sphere_covering_lower(8, 4096, Metric::homogeneous, SphereForm::binary_ambient);
    c.expect(v == 6u, "binary-ambient homogeneous bound " + (v ? std::to_string(*v) : std::string("none")));
    for (std::size_t n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& x : ball_coefficients(n, Metric::euclidean)) total += x;
        c.expect(total == BigInt(1) << static_cast<unsigned>(3 * n), "Euclidean V_i sum wrong at n = " + std::to_string(n));
    }
    c.note("bound 6 at (8, 4096); sum V_i = 8^n for n <= 8");
    return c.done();
}

Outcome monitored_counterexamples() {
    Check c;
    Analyzer an(verify_all());
    const LinearCode rep(GeneratorMatrix({OctVector{1, 1}}));
    g_codes.emplace_back("generators:11", rep);
    const auto a = an.run(rep, "generators:11");
    const auto* d = find_claim(a, "delsarte/r_HW");
    c.expect(d && d->claimed == Rational(2) && d->oracle == 4 && d->verdict == Verdict::refuted,
             "Delsarte counterexample not reported as refuted (s = 2, r_HW = 4)");
    const auto full = LinearCode::full(1);
    g_codes.emplace_back("full:n=1", full);
    const auto f = an.run(full, "full:n=1");
    const auto* g = find_claim(f, "gray image");
    c.expect(g && g->claimed == Rational(0) && g->oracle == 1 && g->verdict == Verdict::refuted,
             "Gray-image counterexample not reported as refuted (r_HW = 0, binary radius 1)");
    c.note("Delsarte on <11>: s = 2 < r_HW = 4; Gray on Z8^1: binary radius 1 vs r_HW = 0; both refuted");
    return c.done();
}

Outcome reed_muller() {
    Check c;
    const FamilySpec s = family::ReedMuller1{4};
    const auto code = build(s);
    g_codes.emplace_back("reed-muller:m=4", code);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = covering_radius(code, Metric::homogeneous);
    const double t = seconds_since(t0);
    c.expect(t < 1, "took " + secs(t));
    c.expect(code.cardinality() == 32, "cardinality " + std::to_string(code.cardinality()));
    const auto a = analyze(s);
    const auto* claim = find_claim(a, "reed-muller/r_HW");
    c.expect(claim && claim->claimed == Rational(6) && claim->oracle == static_cast<long long>(r.value) &&
                 claim->verdict != Verdict::untested,
             "claim r_HW = 6 has no verdict");
    if (claim)
        c.note("r_HW = " + std::to_string(r.value) + " in " + secs(t) + ", claim 6 " +
               std::string(verdict_name(claim->verdict)) + ", |C| = 32");
    return c.done();
}

Outcome ledger_consistency() {
    Check c;
    std::size_t exact = 0;
    for (const auto& [name, code] : g_codes) {
        try {
            const auto a = Analyzer(verify_all()).run(code, name);
            c.expect(a.ledger.consistent(), name + " ledger inconsistent");
            for (auto m : kAllMetrics) exact += a.ledger[m].exact.has_value();
        } catch (const ConsistencyError& e) {
            c.expect(false, name + ": " + e.what());
        }
    }
    c.note(std::to_string(g_codes.size()) + " codes, " + std::to_string(exact) + " exact radii inside sound bounds");
    return c.done();
}

Outcome mattson() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> sym(0, 7);
    for (int it = 0; it < 30; ++it) {
        const auto c0 = oracle::random_code(rng, 2, 1, 3);
        const auto c1 = oracle::random_code(rng, 2, 1, 3);
        std::vector<OctVector> a;
        for (std::size_t r = 0; r < c0.generators().row_count(); ++r) {
            std::vector<std::uint8_t> v(c1.length());
            for (auto& x : v) x = static_cast<std::uint8_t>(sym(rng));
            a.emplace_back(std::move(v));
        }
        const auto composed = mattson_compose(c0, c1, a);
        for (auto m : kAllMetrics) {
            const unsigned r = covering_radius(composed, m).value;
            const unsigned bound = covering_radius(c0, m).value + covering_radius(c1, m).value;
            c.expect(r <= bound, std::string(metric_name(m)) + ": " + std::to_string(r) + " > " + std::to_string(bound));
        }
    }
    const double t = seconds_since(t0);
    c.expect(t < 60, "took " + secs(t));
    c.note("30 triples x 4 metrics in " + secs(t));
    return c.done();
}

Outcome full_run() {
    Check c;
    Budget b;
    b.threads = 1;
    const auto t0 = std::chrono::steady_clock::now();
    const auto first = to_json(verify_paper("all", b)).dump(2);
    const double t = seconds_since(t0);
    const auto second = to_json(verify_paper("all", b)).dump(2);
    c.expect(t < 600, "took " + secs(t));
    c.expect(first == second, "two --threads 1 runs differ");
    const auto parallel = verify_paper("all", {});
    std::size_t untested = parallel.count(Verdict::untested);
    c.expect(to_json(parallel).dump(2) == first, "default-thread run differs from the sequential one");
    c.note("single-threaded run in " + secs(t) + ", " + std::to_string(first.size()) + " bytes, byte-identical twice; " +
           std::to_string(parallel.count(Verdict::confirmed)) + " confirmed, " +
           std::to_string(parallel.count(Verdict::refuted)) + " refuted, " + std::to_string(untested) + " untested");
    return c.done();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"gray isometry", gray_isometry},
        {"torsion structure", torsion_structure},
        {"oracle agreement", oracle_agreement},
        {"repetition exact values", repetition_values},
        {"simplex parameters", simplex_parameters},
        {"octacode", octacode},
        {"sphere-covering arithmetic", sphere_arithmetic},
        {"monitored-claim counterexamples", monitored_counterexamples},
        {"reed-muller m=4", reed_muller},
        {"ledger consistency", ledger_consistency},
        {"mattson", mattson},
        {"full verify-paper run", full_run},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << std::endl;
    }
    return failed ? 1 : 0;
}
