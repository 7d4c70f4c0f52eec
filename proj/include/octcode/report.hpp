#pragma once

// JSON and plain-text rendering of analyses. Field order is fixed so reports are byte-stable.

#include <sstream>
#include <string>

#include <json.hpp>

#include "octcode/harness.hpp"

namespace octcode {

inline constexpr const char* kToolName = "octcode";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

namespace detail {

[[nodiscard]] inline Json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return rational_text(r);
}

[[nodiscard]] inline Json header(const char* command) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

[[nodiscard]] inline Json summary_json(std::size_t confirmed, std::size_t refuted, std::size_t untested) {
    Json j;
    j["confirmed"] = confirmed;
    j["refuted"] = refuted;
    j["untested"] = untested;
    return j;
}

}  // namespace detail

[[nodiscard]] inline Json to_json(const ClaimRecord& c) {
    Json j;
    j["id"] = c.id;
    j["parameters"] = c.parameters;
    j["statement"] = c.statement;
    j["quantity"] = quantity_name(c.quantity);
    j["metric"] = c.metric ? Json(metric_name(*c.metric)) : Json(nullptr);
    j["relation"] = relation_text(c.relation);
    j["claimed"] = detail::rational_json(c.claimed);
    j["reference"] = c.reference ? Json(*c.reference) : Json(nullptr);
    j["oracle"] = c.oracle ? Json(*c.oracle) : Json(nullptr);
    j["verdict"] = verdict_name(c.verdict);
    j["note"] = c.note;
    return j;
}

[[nodiscard]] inline Json to_json(const StructureReport& s) {
    Json j;
    j["type"] = {{"k0", s.type.k0}, {"k1", s.type.k1}, {"k2", s.type.k2}};
    Json sizes = Json::object();
    for (auto t : kAllDerivedTags) sizes[std::string(tag_name(t))] = s.derived_log2_cardinality[static_cast<std::size_t>(t)];
    j["derived_log2_cardinality"] = sizes;
    j["self_orthogonal"] = s.self_orthogonal;
    j["self_dual"] = s.self_dual;
    Json d = Json::array();
    for (const auto& x : s.distances.d) d.push_back(x ? Json(*x) : Json(nullptr));
    j["distances"] = d;
    Json checks = Json::array();
    for (const auto& c : s.checks) {
        Json k;
        k["check_name"] = c.name;
        k["claimed_by"] = c.claimed_by;
        k["verdict"] = verdict_name(c.verdict);
        if (c.witness) k["witness"] = *c.witness;
        checks.push_back(std::move(k));
    }
    j["checks"] = checks;
    j["summary"] = {{"pass", s.count(CheckVerdict::pass)},
                    {"fail", s.count(CheckVerdict::fail)},
                    {"skipped", s.count(CheckVerdict::skipped)}};
    return j;
}

[[nodiscard]] inline Json ledger_json(const Analysis& a) {
    Json out = Json::array();
    for (auto m : kAllMetrics) {
        const auto& l = a.ledger[m];
        Json j;
        j["code"] = a.descriptor;
        j["metric"] = metric_name(m);
        j["exact"] = l.exact ? Json(*l.exact) : Json(nullptr);
        j["exact_source"] = l.exact ? Json(l.exact_source) : Json(nullptr);
        Json bounds = Json::array();
        for (const auto& b : l.lower) bounds.push_back({{"value", b.value}, {"relation", ">="}, {"source", b.source}, {"status", "asserted"}});
        for (const auto& b : l.upper) bounds.push_back({{"value", b.value}, {"relation", "<="}, {"source", b.source}, {"status", "asserted"}});
        for (const auto& c : l.monitored)
            bounds.push_back({{"value", detail::rational_json(c.claimed)},
                              {"relation", relation_text(c.relation)},
                              {"source", c.id},
                              {"status", "monitored"},
                              {"verdict", verdict_name(c.verdict)}});
        j["bounds"] = bounds;
        out.push_back(std::move(j));
    }
    return out;
}

[[nodiscard]] inline Json code_json(const Analysis& a) {
    const auto t = a.code.type();
    Json j;
    j["descriptor"] = a.descriptor;
    j["family"] = a.spec ? Json(format_family(*a.spec)) : Json(nullptr);
    j["length"] = a.code.length();
    Json rows = Json::array();
    for (const auto& r : a.code.generators().rows()) rows.push_back(r.to_string());
    j["generators"] = rows;
    const auto& sf = a.code.standard_form();
    Json form = Json::array();
    for (const auto& r : sf.rows()) form.push_back(r.to_string());
    j["standard_form"] = {{"rows", form}, {"column_permutation", sf.column_permutation()}};
    j["type"] = {{"k0", t.k0}, {"k1", t.k1}, {"k2", t.k2}};
    j["log2_cardinality"] = a.code.log2_cardinality();
    j["cardinality"] = a.code.log2_cardinality() < 63 ? Json(a.code.cardinality()) : Json(nullptr);
    return j;
}

[[nodiscard]] inline Json analysis_body(const Analysis& a) {
    Json j;
    j["code"] = code_json(a);
    j["ledger"] = ledger_json(a);
    Json claims = Json::array();
    for (const auto& c : a.claims) claims.push_back(to_json(c));
    j["claims"] = claims;
    j["structure"] = a.structure ? to_json(*a.structure) : Json(nullptr);
    if (a.distributions.empty()) {
        j["distributions"] = nullptr;
    } else {
        Json d = Json::object();
        for (const auto& [m, dist] : a.distributions) {
            Json w = Json::array();
            for (const auto& [weight, count] : dist) w.push_back({weight, count});
            d[std::string(metric_name(m))] = w;
        }
        j["distributions"] = d;
    }
    j["notes"] = a.notes;
    j["summary"] = detail::summary_json(a.count(Verdict::confirmed), a.count(Verdict::refuted), a.count(Verdict::untested));
    return j;
}

[[nodiscard]] inline Json to_json(const Analysis& a) {
    Json j = detail::header("analyze");
    const Json body = analysis_body(a);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

[[nodiscard]] inline Json to_json(const PaperReport& r) {
    Json j = detail::header("verify-paper");
    j["scope"] = r.scope;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["scope"] = e.scope;
        const Json body = analysis_body(e.analysis);
        for (const auto& [k, v] : body.items()) x[k] = v;
        entries.push_back(std::move(x));
    }
    j["entries"] = entries;
    j["summary"] = detail::summary_json(r.count(Verdict::confirmed), r.count(Verdict::refuted), r.count(Verdict::untested));
    return j;
}

namespace detail {

inline void claim_rows(std::ostream& os, const std::string& scope, const Analysis& a) {
    for (const auto& c : a.claims) {
        os << scope << " | " << a.descriptor << " | " << c.id << " | " << c.statement << " | " << relation_text(c.relation)
           << ' ' << rational_text(c.claimed) << " | " << (c.oracle ? std::to_string(*c.oracle) : "-") << " | "
           << verdict_name(c.verdict);
        if (!c.note.empty()) os << " (" << c.note << ')';
        os << '\n';
    }
}

}  // namespace detail

[[nodiscard]] inline std::string to_table(const Analysis& a) {
    std::ostringstream os;
    const auto t = a.code.type();
    os << "code " << a.descriptor << ": n = " << a.code.length() << ", type (" << t.k0 << ',' << t.k1 << ',' << t.k2
       << "), |C| = 2^" << a.code.log2_cardinality() << '\n';
    for (auto m : kAllMetrics) {
        const auto& l = a.ledger[m];
        const auto up = l.best_upper();
        os << "r_" << metric_name(m) << ": ";
        if (l.exact)
            os << *l.exact << " (" << l.exact_source << ')';
        else
            os << "in [" << l.best_lower() << ", " << (up ? std::to_string(*up) : "inf") << ']';
        os << '\n';
    }
    if (a.structure) {
        for (const auto& c : a.structure->checks) {
            os << "check " << c.name << ": " << verdict_name(c.verdict);
            if (c.witness) os << " (" << *c.witness << ')';
            os << '\n';
        }
    }
    for (const auto& [m, dist] : a.distributions) {
        os << "weights " << metric_name(m) << ":";
        for (const auto& [w, k] : dist) os << ' ' << w << 'x' << k;
        os << '\n';
    }
    detail::claim_rows(os, "-", a);
    for (const auto& n : a.notes) os << "note: " << n << '\n';
    os << "claims: " << a.count(Verdict::confirmed) << " confirmed, " << a.count(Verdict::refuted) << " refuted, "
       << a.count(Verdict::untested) << " untested\n";
    return os.str();
}

[[nodiscard]] inline std::string to_table(const PaperReport& r) {
    std::ostringstream os;
    os << "scope | code | claim | statement | claimed | oracle | verdict\n";
    for (const auto& e : r.entries) detail::claim_rows(os, e.scope, e.analysis);
    for (const auto& e : r.entries)
        if (e.analysis.structure)
            for (const auto& c : e.analysis.structure->checks)
                if (c.verdict == CheckVerdict::fail)
                    os << e.scope << " | " << e.analysis.descriptor << " | structure | " << c.name << " | fail"
                       << (c.witness ? " (" + *c.witness + ")" : std::string()) << '\n';
    os << "claims: " << r.count(Verdict::confirmed) << " confirmed, " << r.count(Verdict::refuted) << " refuted, "
       << r.count(Verdict::untested) << " untested\n";
    return os.str();
}

}  // namespace octcode
