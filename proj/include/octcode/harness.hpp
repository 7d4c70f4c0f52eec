#pragma once

// Analysis of a single code (ledger, oracles, monitored claims) and the fixed suite that checks
// every published family statement at desk-scale parameters.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "octcode/code.hpp"
#include "octcode/covering.hpp"
#include "octcode/families.hpp"
#include "octcode/ledger.hpp"
#include "octcode/torsion.hpp"

namespace octcode {

struct AnalysisOptions {
    Budget budget;
    std::set<Metric> covrad;  // metrics whose exact covering radius is wanted
    bool verify = false;      // attach and adjudicate monitored claims
    bool torsion = false;     // attach the structure report
    bool distributions = false;
};

struct Analysis {
    std::string descriptor;
    std::optional<FamilySpec> spec;
    LinearCode code;
    BoundLedger ledger;
    std::vector<ClaimRecord> claims;
    std::optional<StructureReport> structure;
    std::map<Metric, WeightDistribution> distributions;
    std::vector<std::string> notes;  // budget refusals and skipped work, in order
    std::set<Metric> refused;         // metrics whose oracle was refused by the budget

    [[nodiscard]] std::size_t count(Verdict v) const {
        std::size_t k = 0;
        for (const auto& c : claims) k += (c.verdict == v);
        return k;
    }
};

namespace detail {

inline constexpr std::uint64_t kCrossCheckScanCost = std::uint64_t{1} << 24;

// Runs the dispatcher and, when the codeword scan is cheap, a second oracle to cross-check it.
inline void exact_radius(Analysis& a, Metric m, const Budget& budget) {
    if (a.ledger[m].exact || a.refused.count(m)) return;
    const auto name = std::string(metric_name(m));
    try {
        const auto r = covering_radius(a.code, m, budget);
        std::string source(oracle_name(r.method));
        const std::size_t n = a.code.length();
        if (r.method != Oracle::scan && r.method != Oracle::trivial && n <= kMaxPackedLength &&
            pow8(n) * std::ldexp(1.0, static_cast<int>(a.code.log2_cardinality())) <= static_cast<double>(kCrossCheckScanCost)) {
            const unsigned s = covering_radius_scan(a.code, m, budget);
            if (s != r.value)
                throw ConsistencyError("oracles disagree on r_" + name + ": " + source + " " + std::to_string(r.value) +
                                       ", scan " + std::to_string(s));
            source += "+scan";
        }
        a.ledger.set_exact(m, r.value, source);
    } catch (const BudgetError& e) {
        a.refused.insert(m);
        a.notes.push_back("r_" + name + " not computed: " + e.what());
    }
}

inline void sound_bounds(Analysis& a) {
    const std::size_t n = a.code.length();
    for (auto m : kAllMetrics)
        a.ledger.add_upper(m, static_cast<long long>(n * max_symbol_weight(m)), "trivial: n * max symbol weight");
    for (auto m : {Metric::homogeneous, Metric::euclidean})
        if (const auto lo = sphere_covering_lower(a.code, m, SphereForm::sound))
            a.ledger.add_lower(m, *lo, "sphere covering over 8^n");
}

// Verdict from sound bounds alone, for claims whose exact value is out of budget.
inline bool decide_by_bounds(ClaimRecord& c, const MetricLedger& l) {
    const Rational lo(l.best_lower());
    const auto up = l.best_upper();
    const std::string range = "[" + std::to_string(l.best_lower()) + ", " + (up ? std::to_string(*up) : "inf") + "]";
    bool refuted = false, confirmed = false;
    switch (c.relation) {
        case Relation::le:
            refuted = lo > c.claimed;
            confirmed = up && Rational(*up) <= c.claimed;
            break;
        case Relation::ge:
            refuted = up && Rational(*up) < c.claimed;
            confirmed = lo >= c.claimed;
            break;
        case Relation::eq:
            refuted = lo > c.claimed || (up && Rational(*up) < c.claimed);
            confirmed = up && lo == c.claimed && Rational(*up) == c.claimed;
            break;
    }
    if (!refuted && !confirmed) return false;
    c.oracle.reset();
    c.verdict = refuted ? Verdict::refuted : Verdict::confirmed;
    c.note = "decided by sound bounds " + range;
    return true;
}

struct ReferenceCache {
    std::map<std::string, std::optional<long long>> values;
};

}  // namespace detail

/// Runs the requested oracles and, with `verify`, every monitored claim that applies to the code.
/// Budget refusals leave the affected quantities unknown and the claims untested; the ledger is
/// closed across metrics and checked before returning.
class Analyzer {
public:
    explicit Analyzer(AnalysisOptions options) : opt_(std::move(options)) {}

    [[nodiscard]] const AnalysisOptions& options() const noexcept { return opt_; }

    [[nodiscard]] Analysis run(LinearCode code, std::string descriptor, std::optional<FamilySpec> spec = {}) {
        Analysis a{std::move(descriptor), std::move(spec), std::move(code), {}, {}, {}, {}, {}, {}};
        std::set<Metric> wanted = opt_.covrad;
        if (opt_.verify) {
            wanted.insert(Metric::homogeneous);
            wanted.insert(Metric::euclidean);
        }
        for (auto m : kAllMetrics)
            if (wanted.count(m)) detail::exact_radius(a, m, opt_.budget);
        detail::sound_bounds(a);
        intermetric_close(a.ledger);
        a.ledger.check();

        if (opt_.distributions)
            for (auto m : kAllMetrics) {
                try {
                    a.distributions[m] = weight_distribution(a.code, m);
                } catch (const BudgetError& e) {
                    a.notes.push_back(std::string("weight distribution (") + std::string(metric_name(m)) + ") skipped: " + e.what());
                }
            }
        if (opt_.torsion) {
            try {
                a.structure = structure_report(a.code);
            } catch (const BudgetError& e) {
                a.notes.push_back(std::string("structure report skipped: ") + e.what());
            }
        }
        if (opt_.verify) {
            if (a.spec)
                for (auto c : claims_for(*a.spec)) family_claim(a, std::move(c));
            generic_claims(a);
            for (const auto& c : a.claims)
                if (c.quantity == Quantity::covering_radius && c.metric) a.ledger.add_claim(*c.metric, c);
            intermetric_close(a.ledger);
            a.ledger.check();
        }
        return a;
    }

private:
    void record(Analysis& a, ClaimRecord c, std::optional<long long> value, const std::string& why_unknown) {
        if (value) {
            adjudicate(c, *value);
        } else {
            const bool by_bounds = c.quantity == Quantity::covering_radius && c.metric &&
                                   detail::decide_by_bounds(c, a.ledger[*c.metric]);
            if (!by_bounds) mark_untested(c, why_unknown);
        }
        a.claims.push_back(std::move(c));
    }

    std::optional<long long> radius_of(Analysis& a, Metric m, std::string& why) {
        detail::exact_radius(a, m, opt_.budget);
        if (a.ledger[m].exact) return *a.ledger[m].exact;
        why = "covering radius out of budget";
        return std::nullopt;
    }

    std::optional<long long> referenced(Analysis& a, const std::string& key, std::string& why) {
        const auto hash = key.find('#');
        const auto slash = key.rfind('/');
        const std::string spec_text = key.substr(0, hash);
        const Metric m = parse_metric(key.substr(slash + 1));
        if (a.spec && format_family(*a.spec) == spec_text) return radius_of(a, m, why);
        auto it = cache_.values.find(key);
        if (it == cache_.values.end()) {
            std::optional<long long> v;
            try {
                v = covering_radius(build(parse_family(spec_text)), m, opt_.budget).value;
            } catch (const BudgetError&) {
            }
            it = cache_.values.emplace(key, v).first;
        }
        if (!it->second) why = "referenced value " + key + " out of budget";
        return it->second;
    }

    void family_claim(Analysis& a, ClaimRecord c) {
        std::string why;
        std::optional<long long> value;
        try {
            switch (c.quantity) {
                case Quantity::length: value = static_cast<long long>(a.code.length()); break;
                case Quantity::cardinality:
                    if (a.code.log2_cardinality() < 63) value = static_cast<long long>(a.code.cardinality());
                    else why = "cardinality exceeds 64 bits";
                    break;
                case Quantity::min_weight: {
                    const auto mw = min_weight(a.code, *c.metric);
                    value = mw.value;
                    break;
                }
                case Quantity::covering_radius: value = radius_of(a, *c.metric, why); break;
                case Quantity::dual_covering_radius:
                    value = covering_radius(dual(a.code), *c.metric, opt_.budget).value;
                    break;
                case Quantity::gray_image_covering_radius:
                    value = gray_image_covering_radius(a.code, opt_.budget);
                    break;
                case Quantity::self_orthogonal: value = is_self_orthogonal(a.code) ? 1 : 0; break;
                case Quantity::self_dual: value = is_self_dual(a.code) ? 1 : 0; break;
            }
        } catch (const BudgetError& e) {
            value.reset();
            why = e.what();
        }
        if (c.reference) {
            std::string rwhy;
            const auto ref = referenced(a, *c.reference, rwhy);
            if (!ref) {
                // the conditional bound has no numeric value until the referenced quantity is known
                mark_untested(c, rwhy);
                a.claims.push_back(std::move(c));
                return;
            }
            c.claimed += Rational(*ref);
            c.note = "referenced value " + std::to_string(*ref);
        }
        if (value) {
            const std::string note = c.note;
            adjudicate(c, *value);
            c.note = note;
            a.claims.push_back(std::move(c));
        } else {
            record(a, std::move(c), std::nullopt, why);
        }
    }

    ClaimRecord make(const Analysis& a, std::string id, std::string statement, Quantity q, std::optional<Metric> m,
                     Relation r, Rational v) const {
        ClaimRecord c;
        c.id = std::move(id);
        c.parameters = a.descriptor;
        c.statement = std::move(statement);
        c.quantity = q;
        c.metric = m;
        c.relation = r;
        c.claimed = v;
        return c;
    }

    void generic_claims(Analysis& a) {
        const auto HW = Metric::homogeneous, E = Metric::euclidean;
        const std::size_t n = a.code.length();
        std::string why;

        // Self-orthogonality: the weight-count criterion against the definition.
        {
            const auto so = self_orthogonality(a.code);
            auto c = make(a, "self-orthogonality criterion", "C self-orthogonal iff omega criterion holds",
                          Quantity::self_orthogonal, {}, Relation::eq, Rational(so.criterion ? 1 : 0));
            adjudicate(c, so.definitional ? 1 : 0);
            if (so.witness) c.note = "witness " + *so.witness;
            a.claims.push_back(std::move(c));
        }

        // Delsarte: r_HW <= s(C^perp) and r_E <= 5 s(C^perp).
        try {
            const auto d = delsarte_upper(a.code);
            auto hw = make(a, "delsarte/r_HW", "r_HW <= s(C^perp)", Quantity::covering_radius, HW, Relation::le,
                           Rational(d.homogeneous));
            auto e = make(a, "delsarte/r_E", "r_E <= 5 s(C^perp)", Quantity::covering_radius, E, Relation::le,
                          Rational(d.euclidean));
            record(a, std::move(hw), radius_of(a, HW, why), why);
            record(a, std::move(e), radius_of(a, E, why), why);
        } catch (const BudgetError& ex) {
            a.notes.push_back(std::string("Delsarte bound skipped: dual weight distribution: ") + ex.what());
        }

        // Sphere covering with ambient mass 2^{4n}. When no radius satisfies the inequality the
        // claim is recorded as one past the largest possible weight.
        for (auto m : {HW, E}) {
            const auto lo = sphere_covering_lower(a.code, m, SphereForm::binary_ambient);
            const long long impossible = static_cast<long long>(n * max_symbol_weight(m)) + 1;
            auto c = make(a, "sphere covering 2^4n/r_" + std::string(metric_name(m)),
                          "M * V(r) >= 2^{4n}", Quantity::covering_radius, m, Relation::ge,
                          Rational(lo ? static_cast<long long>(*lo) : impossible));
            if (!lo) c.note = "no radius satisfies the inequality";
            const std::string note = c.note;
            record(a, std::move(c), radius_of(a, m, why), why);
            if (!note.empty() && a.claims.back().note.empty()) a.claims.back().note = note;
        }

        // Torsion lower bound.
        try {
            const auto tb = torsion_lower_bound(a.code);
            if (tb.claims) {
                auto e = make(a, "torsion bound/r_E", "r_E >= 9t", Quantity::covering_radius, E, Relation::ge,
                              Rational(tb.claims->first));
                auto hw = make(a, "torsion bound/r_HW", "r_HW >= 2t", Quantity::covering_radius, HW, Relation::ge,
                               Rational(tb.claims->second));
                record(a, std::move(e), radius_of(a, E, why), why);
                record(a, std::move(hw), radius_of(a, HW, why), why);
            } else {
                a.notes.push_back("torsion bound not applicable: hypothesis " + tb.failed_hypothesis + " fails");
            }
        } catch (const BudgetError& ex) {
            a.notes.push_back(std::string("torsion bound skipped: ") + ex.what());
        }

        // Gray image: r_H(phi(C)) = r_HW(C).
        if (const auto r = radius_of(a, HW, why)) {
            auto c = make(a, "gray image", "r_H(phi(C)) = r_HW(C)", Quantity::gray_image_covering_radius, {},
                          Relation::eq, Rational(*r));
            try {
                adjudicate(c, gray_image_covering_radius(a.code, opt_.budget));
            } catch (const BudgetError& ex) {
                mark_untested(c, ex.what());
            }
            a.claims.push_back(std::move(c));
        } else {
            a.notes.push_back("Gray image comparison skipped: r_homogeneous unknown");
        }
    }

    AnalysisOptions opt_;
    detail::ReferenceCache cache_;
};

// ---------------------------------------------------------------------------------------------

inline const std::vector<std::string>& paper_scopes() {
    static const std::vector<std::string> s = {"repetition", "brep",    "simplex", "macdonald", "reed-muller",
                                               "octacode",   "bounds",  "torsion", "all"};
    return s;
}

struct PaperEntry {
    std::string scope;
    Analysis analysis;
};

struct PaperReport {
    std::string scope;
    std::vector<PaperEntry> entries;

    [[nodiscard]] std::size_t count(Verdict v) const {
        std::size_t k = 0;
        for (const auto& e : entries) k += e.analysis.count(v);
        return k;
    }
};

namespace detail {

inline LinearCode code_from_rows(std::vector<OctVector> rows) { return LinearCode(GeneratorMatrix(std::move(rows))); }

inline void explain_untested_radii(Analysis& a, const std::string& why) {
    for (auto& c : a.claims)
        if ((c.quantity == Quantity::covering_radius || c.quantity == Quantity::dual_covering_radius) &&
            c.verdict == Verdict::untested)
            c.note = why;
}

}  // namespace detail

/// The fixed desk-scale claim suite. Budget refusals degrade claims to untested and never abort.
[[nodiscard]] inline PaperReport verify_paper(const std::string& scope, const Budget& budget) {
    bool known = false;
    for (const auto& s : paper_scopes()) known = known || s == scope;
    if (!known) throw ParameterError("unknown verify-paper scope '" + scope + "'");
    const auto on = [&](const char* s) { return scope == "all" || scope == s; };

    PaperReport out{scope, {}};
    AnalysisOptions all{budget, {kAllMetrics.begin(), kAllMetrics.end()}, true, false, false};
    Analyzer analyzer(all);
    auto family = [&](const char* sc, const FamilySpec& spec) {
        out.entries.push_back({sc, analyzer.run(build(spec), format_family(spec), spec)});
    };

    if (on("repetition"))
        for (std::size_t n : {1u, 2u, 4u, 8u})
            for (unsigned a = 1; a <= 7; ++a) family("repetition", family::Repetition{a, n});

    if (on("brep")) {
        std::array<std::size_t, 7> m{};
        for (unsigned code = 0; code < 2187; ++code) {
            unsigned x = code, sum = 0;
            for (auto& v : m) {
                v = x % 3;
                x /= 3;
                sum += static_cast<unsigned>(v);
            }
            if (sum >= 1 && sum <= 4) family("brep", family::BlockRepetition{m});
        }
    }

    if (on("simplex")) {
        family("simplex", family::SimplexAlpha{1});
        // covering oracles only at k = 1 for the alpha family
        AnalysisOptions params = all;
        params.covrad.clear();
        params.budget.coset_table = 0;
        params.budget.scan_evaluations = 0;
        Analyzer light(params);
        const FamilySpec s2 = family::SimplexAlpha{2};
        out.entries.push_back({"simplex", light.run(build(s2), format_family(s2), s2)});
        detail::explain_untested_radii(out.entries.back().analysis, "covering oracles run at k = 1 only");
        family("simplex", family::SimplexBeta{2});
    }

    if (on("macdonald")) {
        family("macdonald", family::MacDonaldAlpha{2, 1});
        family("macdonald", family::MacDonaldBeta{2, 1});
    }

    if (on("reed-muller")) family("reed-muller", family::ReedMuller1{4});
    if (on("octacode")) family("octacode", family::Octacode{});

    if (on("bounds")) {
        out.entries.push_back({"bounds", analyzer.run(detail::code_from_rows({OctVector{1, 1}}), "generators:11")});
        out.entries.push_back({"bounds", analyzer.run(LinearCode::zero(1), "zero:n=1")});
        out.entries.push_back({"bounds", analyzer.run(LinearCode::full(1), "full:n=1")});
        out.entries.push_back({"bounds", analyzer.run(LinearCode::full(2), "full:n=2")});
    }

    if (on("torsion")) {
        AnalysisOptions t = all;
        t.torsion = true;
        Analyzer ta(t);
        out.entries.push_back(
            {"torsion", ta.run(detail::code_from_rows({OctVector{2, 2, 0, 0}, OctVector{4, 0, 4, 4}}), "generators:2200,4044")});
        const FamilySpec s1 = family::SimplexAlpha{1}, oc = family::Octacode{};
        out.entries.push_back({"torsion", ta.run(build(s1), format_family(s1), s1)});
        out.entries.push_back({"torsion", ta.run(build(oc), format_family(oc), oc)});
    }
    return out;
}

}  // namespace octcode
