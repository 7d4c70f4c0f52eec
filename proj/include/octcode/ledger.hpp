#pragma once

// Per-code, per-metric record of covering-radius knowledge: exact oracle values, sound bounds with
// their derivation, and monitored claims awaiting a verdict.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "octcode/errors.hpp"
#include "octcode/ring.hpp"

namespace octcode {

using Rational = boost::rational<long long>;

[[nodiscard]] inline std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class Relation : std::uint8_t { eq, le, ge };

[[nodiscard]] constexpr std::string_view relation_text(Relation r) noexcept {
    switch (r) {
        case Relation::eq: return "=";
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
    }
    return "?";
}

[[nodiscard]] inline bool relation_holds(Relation r, long long value, const Rational& claimed) {
    switch (r) {
        case Relation::eq: return Rational(value) == claimed;
        case Relation::le: return Rational(value) <= claimed;
        case Relation::ge: return Rational(value) >= claimed;
    }
    return false;
}

/// What a claim is about. Boolean quantities use 1 for true and 0 for false.
enum class Quantity : std::uint8_t {
    length,
    cardinality,
    min_weight,
    covering_radius,
    dual_covering_radius,
    gray_image_covering_radius,
    self_orthogonal,
    self_dual,
};

[[nodiscard]] constexpr std::string_view quantity_name(Quantity q) noexcept {
    switch (q) {
        case Quantity::length: return "length";
        case Quantity::cardinality: return "cardinality";
        case Quantity::min_weight: return "min_weight";
        case Quantity::covering_radius: return "covering_radius";
        case Quantity::dual_covering_radius: return "dual_covering_radius";
        case Quantity::gray_image_covering_radius: return "gray_image_covering_radius";
        case Quantity::self_orthogonal: return "self_orthogonal";
        case Quantity::self_dual: return "self_dual";
    }
    return "?";
}

enum class Verdict : std::uint8_t { confirmed, refuted, untested };

[[nodiscard]] constexpr std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted: return "refuted";
        case Verdict::untested: return "untested";
    }
    return "?";
}

/// One published statement instantiated at concrete parameters.
///
/// When `reference` is set the claim is conditional: its claimed value is `claimed` plus the oracle
/// value of the referenced quantity, filled in by the harness once that value is known.
struct ClaimRecord {
    std::string id;          // family and theorem label, e.g. "repetition/r_E"
    std::string parameters;  // e.g. "a=1,n=8"
    std::string statement;   // formula as printed, e.g. "r_E = 11n/2"
    Quantity quantity = Quantity::covering_radius;
    std::optional<Metric> metric;
    Relation relation = Relation::eq;
    Rational claimed{0};
    std::optional<std::string> reference;
    std::optional<long long> oracle;
    Verdict verdict = Verdict::untested;
    std::string note;
};

/// Sets oracle value and verdict. A refuted record keeps the value it was refuted with.
inline void adjudicate(ClaimRecord& c, long long oracle_value) {
    c.oracle = oracle_value;
    c.verdict = relation_holds(c.relation, oracle_value, c.claimed) ? Verdict::confirmed : Verdict::refuted;
}

inline void mark_untested(ClaimRecord& c, std::string why) {
    c.oracle.reset();
    c.verdict = Verdict::untested;
    c.note = std::move(why);
}

struct SoundBound {
    long long value = 0;
    std::string source;
    friend bool operator==(const SoundBound&, const SoundBound&) = default;
};

struct MetricLedger {
    std::optional<long long> exact;
    std::string exact_source;
    std::vector<SoundBound> lower;
    std::vector<SoundBound> upper;
    std::vector<ClaimRecord> monitored;

    /// Largest sound lower bound; 0 when none is recorded (radii are non-negative).
    [[nodiscard]] long long best_lower() const {
        long long b = 0;
        for (const auto& s : lower) b = std::max(b, s.value);
        return b;
    }
    [[nodiscard]] std::optional<long long> best_upper() const {
        std::optional<long long> b;
        for (const auto& s : upper)
            if (!b || s.value < *b) b = s.value;
        return b;
    }
};

class BoundLedger {
public:
    [[nodiscard]] MetricLedger& operator[](Metric m) { return per_metric_[static_cast<std::size_t>(m)]; }
    [[nodiscard]] const MetricLedger& operator[](Metric m) const { return per_metric_[static_cast<std::size_t>(m)]; }

    void set_exact(Metric m, long long value, std::string source) {
        auto& l = (*this)[m];
        if (l.exact && *l.exact != value)
            throw ConsistencyError("two oracles disagree on r_" + std::string(metric_name(m)) + ": " +
                                   std::to_string(*l.exact) + " (" + l.exact_source + ") vs " + std::to_string(value) +
                                   " (" + source + ")");
        if (!l.exact) {
            l.exact = value;
            l.exact_source = std::move(source);
        }
    }

    void add_lower(Metric m, long long value, std::string source) { insert((*this)[m].lower, value, std::move(source)); }
    void add_upper(Metric m, long long value, std::string source) { insert((*this)[m].upper, value, std::move(source)); }
    void add_claim(Metric m, ClaimRecord c) { (*this)[m].monitored.push_back(std::move(c)); }

    /// Throws ConsistencyError unless every exact value lies between its sound bounds and every
    /// lower bound is at most every upper bound.
    void check() const {
        for (auto m : kAllMetrics) {
            const auto& l = (*this)[m];
            const auto lo = l.best_lower();
            const auto up = l.best_upper();
            const std::string name(metric_name(m));
            if (up && lo > *up)
                throw ConsistencyError("sound bounds cross for r_" + name + ": " + std::to_string(lo) + " > " +
                                       std::to_string(*up));
            if (l.exact && (*l.exact < lo || (up && *l.exact > *up)))
                throw ConsistencyError("exact r_" + name + " = " + std::to_string(*l.exact) +
                                       " outside sound bounds [" + std::to_string(lo) + ", " +
                                       (up ? std::to_string(*up) : std::string("inf")) + "]");
        }
    }

    [[nodiscard]] bool consistent() const {
        try {
            check();
            return true;
        } catch (const ConsistencyError&) {
            return false;
        }
    }

private:
    static void insert(std::vector<SoundBound>& v, long long value, std::string source) {
        SoundBound b{value, std::move(source)};
        if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(std::move(b));
    }

    std::array<MetricLedger, 4> per_metric_{};
};

namespace detail {

inline long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace detail

/// Propagates exact values and sound bounds across metrics until nothing improves, using
///   r_HW / 2 <= r_E <= 5 r_HW,   r_L <= r_E,   r_HW <= 2 r_L,
/// which follow from the same inequalities between symbol weights. A propagated bound is added
/// only when it is strictly better than what the target metric already has.
inline void intermetric_close(BoundLedger& L) {
    struct Best {
        long long lo;
        std::string lo_src;
        std::optional<long long> up;
        std::string up_src;
    };
    auto best = [&](Metric m) {
        const auto& l = L[m];
        Best b{l.best_lower(), "trivial", l.best_upper(), ""};
        for (const auto& s : l.lower)
            if (s.value == b.lo) {
                b.lo_src = s.source;
                break;
            }
        if (b.up)
            for (const auto& s : l.upper)
                if (s.value == *b.up) {
                    b.up_src = s.source;
                    break;
                }
        if (l.exact) {
            if (*l.exact > b.lo || b.lo_src == "trivial") {
                b.lo = *l.exact;
                b.lo_src = "exact: " + l.exact_source;
            }
            if (!b.up || *l.exact < *b.up) {
                b.up = *l.exact;
                b.up_src = "exact: " + l.exact_source;
            }
        }
        return b;
    };
    auto name = [](Metric m) { return std::string(metric_name(m)); };

    bool changed = true;
    while (changed) {
        changed = false;
        auto try_lower = [&](Metric to, long long v, Metric from, const std::string& rule, const std::string& src) {
            const auto cur = best(to);
            if (v > cur.lo) {
                L.add_lower(to, v, "inter-metric " + rule + " from r_" + name(from) + " [" + src + "]");
                changed = true;
            }
        };
        auto try_upper = [&](Metric to, long long v, Metric from, const std::string& rule, const std::string& src) {
            const auto cur = best(to);
            if (!cur.up || v < *cur.up) {
                L.add_upper(to, v, "inter-metric " + rule + " from r_" + name(from) + " [" + src + "]");
                changed = true;
            }
        };
        const auto hw = best(Metric::homogeneous);
        const auto e = best(Metric::euclidean);
        const auto lee = best(Metric::lee);

        if (hw.lo > 0) try_lower(Metric::euclidean, detail::ceil_div(hw.lo, 2), Metric::homogeneous, "r_E >= r_HW/2", hw.lo_src);
        if (hw.up) try_upper(Metric::euclidean, 5 * *hw.up, Metric::homogeneous, "r_E <= 5 r_HW", hw.up_src);
        if (e.lo > 0) try_lower(Metric::homogeneous, detail::ceil_div(e.lo, 5), Metric::euclidean, "r_HW >= r_E/5", e.lo_src);
        if (e.up) try_upper(Metric::homogeneous, 2 * *e.up, Metric::euclidean, "r_HW <= 2 r_E", e.up_src);
        if (e.up) try_upper(Metric::lee, *e.up, Metric::euclidean, "r_L <= r_E", e.up_src);
        if (lee.lo > 0) try_lower(Metric::euclidean, lee.lo, Metric::lee, "r_E >= r_L", lee.lo_src);
        if (lee.up) try_upper(Metric::homogeneous, 2 * *lee.up, Metric::lee, "r_HW <= 2 r_L", lee.up_src);
        if (hw.lo > 0) try_lower(Metric::lee, detail::ceil_div(hw.lo, 2), Metric::homogeneous, "r_L >= r_HW/2", hw.lo_src);
    }
}

}  // namespace octcode
