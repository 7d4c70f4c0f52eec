#pragma once

// Exact covering radius oracles and the covering-radius bounds that do not need an oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "octcode/code.hpp"
#include "octcode/ledger.hpp"
#include "octcode/torsion.hpp"

namespace octcode {

using BigInt = boost::multiprecision::cpp_int;

/// Work limits for the exhaustive oracles. Each oracle estimates its cost up front and throws
/// BudgetError instead of starting work it cannot finish within these.
struct Budget {
    std::uint64_t scan_evaluations = 2'000'000'000;  // distance evaluations (scan) or visited vectors
    std::uint64_t coset_table = std::uint64_t{1} << 26;
    unsigned gray_max_n = 5;
    unsigned threads = 0;  // 0: one worker per hardware thread

    [[nodiscard]] unsigned worker_count() const {
        if (threads) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1;
    }
};

enum class Oracle : std::uint8_t { trivial, scan, coset, ball };

[[nodiscard]] constexpr std::string_view oracle_name(Oracle o) noexcept {
    switch (o) {
        case Oracle::trivial: return "trivial";
        case Oracle::scan: return "scan";
        case Oracle::coset: return "coset";
        case Oracle::ball: return "ball";
    }
    return "?";
}

namespace detail {

// Vectors of length <= 16 packed one coordinate per nibble, coordinate i in bits 4i..4i+2.
inline constexpr std::size_t kMaxPackedLength = 16;

[[nodiscard]] constexpr std::uint64_t low_mask(std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m |= std::uint64_t{7} << (4 * i);
    return m;
}

[[nodiscard]] constexpr std::uint64_t high_mask(std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m |= std::uint64_t{8} << (4 * i);
    return m;
}

[[nodiscard]] inline std::uint64_t pack(std::span<const std::uint8_t> v) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < v.size(); ++i) p |= std::uint64_t{v[i] & 7u} << (4 * i);
    return p;
}

// Octal digits of idx, coordinate 0 least significant.
[[nodiscard]] inline std::uint64_t pack_index(std::uint64_t idx, std::size_t n) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < n; ++i) p |= ((idx >> (3 * i)) & 7u) << (4 * i);
    return p;
}

// Weight of a packed vector: one lookup per four coordinates.
class PackedWeight {
public:
    PackedWeight(Metric m, std::size_t n) : table_(1u << 16), chunks_((n + 3) / 4) {
        const auto& w = kSymbolWeight[static_cast<std::size_t>(m)];
        for (unsigned x = 0; x < (1u << 16); ++x)
            table_[x] = static_cast<std::uint16_t>(w[x & 7] + w[(x >> 4) & 7] + w[(x >> 8) & 7] + w[(x >> 12) & 7]);
    }
    [[nodiscard]] unsigned operator()(std::uint64_t p) const noexcept {
        unsigned s = 0;
        for (std::size_t k = 0; k < chunks_; ++k) s += table_[(p >> (16 * k)) & 0xFFFF];
        return s;
    }

private:
    std::vector<std::uint16_t> table_;
    std::size_t chunks_;
};

[[nodiscard]] inline double pow8(std::size_t n) { return std::ldexp(1.0, static_cast<int>(3 * n)); }

// Runs f(lo, hi, worker) on `workers` contiguous slices of [0, total).
template <class F>
void parallel_ranges(std::uint64_t total, unsigned workers, F&& f) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total / 1024 + 1)));
    if (workers == 1) {
        f(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t step = total / workers, extra = total % workers;
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + step + (w < extra ? 1 : 0);
        pool.emplace_back([&f, lo, hi, w] { f(lo, hi, w); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

// Syndromes as tuples of inner products with the rows of the dual's standard form, one nibble per
// row (up to 32 rows in two words). Row j has entries in 2^v_j Z8, so its inner product takes
// 8 >> v_j values and the tuple is a mixed-radix coset index.
struct Syndrome {
    std::array<std::uint64_t, 2> w{};

    Syndrome& operator+=(const Syndrome& o) noexcept {
        constexpr std::uint64_t L = 0x7777777777777777ull;
        w[0] = (w[0] + o.w[0]) & L;
        w[1] = (w[1] + o.w[1]) & L;
        return *this;
    }
};

class SyndromeMap {
public:
    explicit SyndromeMap(const LinearCode& code) : n_(code.length()) {
        const auto d = dual(code);
        const auto& e = d.echelon();
        rows_ = e.rows.size();
        if (rows_ > 32) throw BudgetError("syndrome has more than 32 components", static_cast<double>(rows_), 32.0);
        std::vector<std::uint64_t> stride(rows_);
        cosets_ = 1;
        for (std::size_t j = 0; j < rows_; ++j) {
            stride[j] = cosets_;
            cosets_ *= 8u >> e.pivot_val[j];
        }
        multiple_.assign(n_ * 8, Syndrome{});
        for (std::size_t i = 0; i < n_; ++i)
            for (unsigned s = 0; s < 8; ++s) {
                Syndrome syn;
                for (std::size_t j = 0; j < rows_; ++j)
                    syn.w[j / 16] |= std::uint64_t{(s * e.rows[j][i]) & 7u} << (4 * (j % 16));
                multiple_[i * 8 + s] = syn;
            }
        byte_index_.assign(16 * 256, 0);
        for (std::size_t b = 0; b < 16; ++b)
            for (unsigned x = 0; x < 256; ++x) {
                std::uint64_t idx = 0;
                for (unsigned half = 0; half < 2; ++half) {
                    const std::size_t j = 2 * b + half;
                    if (j >= rows_) continue;
                    const unsigned nib = (x >> (4 * half)) & 7u;
                    idx += (nib >> e.pivot_val[j]) * stride[j];
                }
                byte_index_[b * 256 + x] = idx;
            }
    }

    [[nodiscard]] std::uint64_t cosets() const noexcept { return cosets_; }
    [[nodiscard]] std::size_t length() const noexcept { return n_; }

    [[nodiscard]] const Syndrome& term(std::size_t coord, unsigned symbol) const { return multiple_[coord * 8 + symbol]; }

    [[nodiscard]] std::uint64_t index(const Syndrome& s) const noexcept {
        std::uint64_t idx = 0;
        const std::size_t bytes = (rows_ + 1) / 2;
        for (std::size_t b = 0; b < bytes; ++b) {
            const unsigned x = static_cast<unsigned>((s.w[b / 8] >> (8 * (b % 8))) & 0xFFu);
            idx += byte_index_[b * 256 + x];
        }
        return idx;
    }

    [[nodiscard]] Syndrome of(std::span<const std::uint8_t> v) const {
        Syndrome s;
        for (std::size_t i = 0; i < n_; ++i) s += term(i, v[i] & 7u);
        return s;
    }

private:
    std::size_t n_;
    std::size_t rows_ = 0;
    std::uint64_t cosets_ = 1;
    std::vector<Syndrome> multiple_;
    std::vector<std::uint64_t> byte_index_;
};

[[nodiscard]] inline std::vector<std::uint64_t> packed_codewords(const LinearCode& code) {
    std::vector<std::uint64_t> out;
    out.reserve(code.cardinality());
    for_each_codeword(code, [&](std::span<const std::uint8_t> w) { out.push_back(pack(w)); });
    return out;
}

}  // namespace detail

/// Exact covering radius by visiting every ambient vector and every codeword. Workers own
/// contiguous slices of [0, 8^n) and the slice maxima are combined at the end.
[[nodiscard]] inline unsigned covering_radius_scan(const LinearCode& code, Metric m, const Budget& budget = {}) {
    const std::size_t n = code.length();
    const double cost = detail::pow8(n) * std::ldexp(1.0, static_cast<int>(code.log2_cardinality()));
    if (n > detail::kMaxPackedLength || cost > static_cast<double>(budget.scan_evaluations))
        throw BudgetError("scan needs 8^" + std::to_string(n) + " x |C| distance evaluations", cost,
                          static_cast<double>(budget.scan_evaluations));
    const auto words = detail::packed_codewords(code);
    const detail::PackedWeight wt(m, n);
    const std::uint64_t H = detail::high_mask(n), L = detail::low_mask(n);
    const std::uint64_t total = std::uint64_t{1} << (3 * n);

    std::vector<unsigned> part(std::max(1u, budget.worker_count()), 0);
    detail::parallel_ranges(total, budget.worker_count(), [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        std::uint64_t p = detail::pack_index(lo, n);
        unsigned local = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            unsigned best = ~0u;
            for (auto c : words) {
                const unsigned d = wt(((p | H) - c) & L);
                if (d < best) {
                    best = d;
                    if (best <= local) break;
                }
            }
            local = std::max(local, best);
            p = ((p | H) + 1) & L;
        }
        part[w] = local;
    });
    return *std::max_element(part.begin(), part.end());
}

/// Exact covering radius as the largest minimum weight over cosets. Every ambient vector is
/// visited once and filed under its syndrome; per-worker minimum tables are merged at the end.
[[nodiscard]] inline unsigned covering_radius_coset(const LinearCode& code, Metric m, const Budget& budget = {}) {
    const std::size_t n = code.length();
    const std::size_t log2_cosets = 3 * n - code.log2_cardinality();
    if (log2_cosets >= 63 || (std::uint64_t{1} << log2_cosets) > budget.coset_table)
        throw BudgetError("coset table needs 2^" + std::to_string(log2_cosets) + " entries",
                          std::ldexp(1.0, static_cast<int>(log2_cosets)), static_cast<double>(budget.coset_table));
    if (n > detail::kMaxPackedLength || detail::pow8(n) > static_cast<double>(budget.scan_evaluations))
        throw BudgetError("coset oracle visits 8^" + std::to_string(n) + " vectors", detail::pow8(n),
                          static_cast<double>(budget.scan_evaluations));
    if (log2_cosets == 0) return 0;

    const detail::SyndromeMap syn(code);
    const std::uint64_t cosets = syn.cosets();
    const detail::PackedWeight wt(m, n);
    const std::uint64_t H = detail::high_mask(n), L = detail::low_mask(n);
    const std::uint64_t total = std::uint64_t{1} << (3 * n);

    // prefix[k]: syndrome change when coordinates 0..k all step by +1 (one odometer tick with k carries)
    std::vector<detail::Syndrome> prefix(n);
    for (std::size_t k = 0; k < n; ++k) {
        prefix[k] = syn.term(k, 1);
        if (k) prefix[k] += prefix[k - 1];
    }

    // Cap the total table memory at 256 MiB.
    const std::uint64_t max_workers = std::max<std::uint64_t>(1, (std::uint64_t{1} << 27) / cosets);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(budget.worker_count(), max_workers));
    std::vector<std::vector<std::uint16_t>> tables(workers);

    detail::parallel_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        auto& table = tables[w];
        table.assign(cosets, 0xFFFF);
        std::vector<std::uint8_t> start(n);
        for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<std::uint8_t>((lo >> (3 * i)) & 7u);
        std::uint64_t p = detail::pack(start);
        detail::Syndrome s = syn.of(start);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto& slot = table[syn.index(s)];
            const unsigned d = wt(p);
            if (d < slot) slot = static_cast<std::uint16_t>(d);
            std::size_t k = 0;
            while (k + 1 < n && ((p >> (4 * k)) & 7u) == 7u) ++k;
            s += prefix[k];
            p = ((p | H) + 1) & L;
        }
    });

    unsigned radius = 0;
    for (std::uint64_t c = 0; c < cosets; ++c) {
        unsigned best = 0xFFFF;
        for (const auto& t : tables)
            if (!t.empty()) best = std::min<unsigned>(best, t[c]);
        if (best == 0xFFFF) throw ConsistencyError("coset oracle: a coset received no vector");
        radius = std::max(radius, best);
    }
    return radius;
}

/// Exact covering radius for long codes with few cosets: vectors are generated in order of
/// increasing weight until every coset has been hit; the last weight needed is the radius.
[[nodiscard]] inline unsigned covering_radius_ball(const LinearCode& code, Metric m, const Budget& budget = {}) {
    const std::size_t n = code.length();
    const std::size_t log2_cosets = 3 * n - code.log2_cardinality();
    if (log2_cosets >= 63 || (std::uint64_t{1} << log2_cosets) > budget.coset_table)
        throw BudgetError("coset table needs 2^" + std::to_string(log2_cosets) + " entries",
                          std::ldexp(1.0, static_cast<int>(log2_cosets)), static_cast<double>(budget.coset_table));
    if (log2_cosets == 0) return 0;

    const detail::SyndromeMap syn(code);
    const std::uint64_t cosets = syn.cosets();
    const auto& wtab = detail::kSymbolWeight[static_cast<std::size_t>(m)];
    const unsigned wmax = max_symbol_weight(m);
    std::vector<bool> hit(cosets, false);
    std::uint64_t covered = 0, visited = 0;

    // Visits every vector of weight exactly `rem` supported on coordinates >= start.
    auto dfs = [&](auto&& self, std::size_t start, unsigned rem, const detail::Syndrome& s) -> void {
        if (++visited > budget.scan_evaluations)
            throw BudgetError("ball enumeration exceeded the visit budget", static_cast<double>(visited),
                              static_cast<double>(budget.scan_evaluations));
        if (rem == 0) {
            const auto idx = syn.index(s);
            if (!hit[idx]) {
                hit[idx] = true;
                ++covered;
            }
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            if (static_cast<std::uint64_t>(n - i) * wmax < rem) break;
            for (unsigned sym = 1; sym < 8; ++sym) {
                if (wtab[sym] > rem) continue;
                detail::Syndrome t = s;
                t += syn.term(i, sym);
                self(self, i + 1, rem - wtab[sym], t);
            }
        }
    };
    for (unsigned w = 0; w <= n * wmax; ++w) {
        dfs(dfs, 0, w, detail::Syndrome{});
        if (covered == cosets) return w;
    }
    throw ConsistencyError("ball oracle: cosets left uncovered at maximum weight");
}

struct CoveringRadius {
    unsigned value = 0;
    Oracle method = Oracle::trivial;
};

/// Picks the cheapest exact oracle that fits the budget: coset table over the ambient space,
/// then the codeword scan, then weight-ordered ball growth for long codes with few cosets.
[[nodiscard]] inline CoveringRadius covering_radius(const LinearCode& code, Metric m, const Budget& budget = {}) {
    const std::size_t n = code.length();
    const std::size_t log2_cosets = 3 * n - code.log2_cardinality();
    if (log2_cosets == 0) return {0, Oracle::trivial};
    const bool table_fits = log2_cosets < 63 && (std::uint64_t{1} << log2_cosets) <= budget.coset_table;
    const double ambient = detail::pow8(n);
    const double scan_cost = ambient * std::ldexp(1.0, static_cast<int>(code.log2_cardinality()));
    const bool packable = n <= detail::kMaxPackedLength;
    if (packable && table_fits && ambient <= static_cast<double>(budget.scan_evaluations))
        return {covering_radius_coset(code, m, budget), Oracle::coset};
    if (packable && scan_cost <= static_cast<double>(budget.scan_evaluations))
        return {covering_radius_scan(code, m, budget), Oracle::scan};
    if (table_fits) return {covering_radius_ball(code, m, budget), Oracle::ball};
    char cost[32];
    std::snprintf(cost, sizeof cost, "%.3g", scan_cost);
    throw BudgetError(std::string("no covering radius oracle fits the budget (scan needs ") + cost +
                          " evaluations, coset table 2^" + std::to_string(log2_cosets) + " entries)",
                      scan_cost, static_cast<double>(budget.scan_evaluations));
}

/// Binary Hamming covering radius of the Gray image inside {0,1}^{4n}, by breadth-first search
/// from all image words at once.
[[nodiscard]] inline unsigned gray_image_covering_radius(const LinearCode& code, const Budget& budget = {}) {
    const std::size_t n = code.length();
    if (n > budget.gray_max_n)
        throw BudgetError("Gray image scan over 2^" + std::to_string(4 * n) + " words exceeds length limit",
                          std::ldexp(1.0, static_cast<int>(4 * n)), std::ldexp(1.0, static_cast<int>(4 * budget.gray_max_n)));
    const std::size_t bits = 4 * n;
    std::vector<std::uint8_t> dist(std::size_t{1} << bits, 0xFF);
    std::vector<std::uint32_t> frontier;
    for_each_codeword(code, [&](std::span<const std::uint8_t> w) {
        std::uint32_t x = 0;
        for (std::size_t i = 0; i < n; ++i) x |= std::uint32_t{detail::kGrayNibble[w[i]]} << (4 * i);
        if (dist[x] != 0) {
            dist[x] = 0;
            frontier.push_back(x);
        }
    });
    unsigned radius = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto x : frontier)
            for (std::size_t b = 0; b < bits; ++b) {
                const std::uint32_t y = x ^ (std::uint32_t{1} << b);
                if (dist[y] == 0xFF) {
                    dist[y] = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(y);
                }
            }
        if (!next.empty()) ++radius;
        frontier = std::move(next);
    }
    return radius;
}

enum class SphereForm : std::uint8_t { binary_ambient, sound };

/// Ball sizes by radius: for Euclidean the coefficients V_i of (1 + 2x + 2x^4 + 2x^9 + x^16)^n
/// (exact ball in Z8^n), for homogeneous binom(4n, i) (Hamming ball around the Gray image).
[[nodiscard]] inline std::vector<BigInt> ball_coefficients(std::size_t n, Metric m) {
    if (m == Metric::homogeneous) {
        std::vector<BigInt> c(4 * n + 1);
        c[0] = 1;
        for (std::size_t i = 1; i <= 4 * n; ++i) c[i] = c[i - 1] * (4 * n - i + 1) / i;
        return c;
    }
    if (m != Metric::euclidean) throw ParameterError("sphere-covering bound is defined for homogeneous and euclidean");
    const std::array<std::pair<unsigned, unsigned>, 5> terms = {{{0, 1}, {1, 2}, {4, 2}, {9, 2}, {16, 1}}};
    std::vector<BigInt> poly{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<BigInt> next(poly.size() + 16);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            for (auto [deg, coef] : terms) next[i + deg] += poly[i] * coef;
        }
        poly = std::move(next);
    }
    return poly;
}

/// Smallest r with (ball of radius r) * M >= ambient mass, where the mass is 2^{4n} in the
/// binary_ambient form and 8^n = 2^{3n} in the sound form. Empty when no radius satisfies the inequality
/// (possible only in the binary_ambient form).
[[nodiscard]] inline std::optional<unsigned> sphere_covering_lower(std::size_t n, const BigInt& M, Metric m,
                                                                   SphereForm form) {
    if (M < 1) throw ParameterError("sphere-covering bound: cardinality must be positive");
    const auto coef = ball_coefficients(n, m);
    const BigInt mass = BigInt(1) << static_cast<unsigned>((form == SphereForm::binary_ambient ? 4 : 3) * n);
    BigInt ball = 0;
    for (std::size_t r = 0; r < coef.size(); ++r) {
        ball += coef[r];
        if (ball * M >= mass) return static_cast<unsigned>(r);
    }
    return std::nullopt;
}

[[nodiscard]] inline std::optional<unsigned> sphere_covering_lower(const LinearCode& code, Metric m, SphereForm form) {
    return sphere_covering_lower(code.length(), BigInt(1) << static_cast<unsigned>(code.log2_cardinality()), m, form);
}

struct DelsarteBound {
    unsigned s = 0;         // distinct nonzero homogeneous weights of the dual
    unsigned homogeneous = 0;  // claimed upper bound on r_HW
    unsigned euclidean = 0;    // claimed upper bound on r_E
};

[[nodiscard]] inline DelsarteBound delsarte_upper(const LinearCode& code,
                                                  std::uint64_t limit = kDefaultEnumerationLimit) {
    const auto dist = weight_distribution(dual(code), Metric::homogeneous, limit);
    unsigned s = 0;
    for (const auto& [w, count] : dist) s += (w != 0 && count != 0);
    return {s, s, 5 * s};
}

/// Code generated by [[0, G1], [G0, A]] where G0, G1 are the generator rows of c0, c1.
[[nodiscard]] inline LinearCode mattson_compose(const LinearCode& c0, const LinearCode& c1,
                                                const std::vector<OctVector>& a) {
    const auto& g0 = c0.generators().rows();
    const auto& g1 = c1.generators().rows();
    const std::size_t n0 = c0.length(), n1 = c1.length();
    if (a.size() != g0.size()) throw DimensionError("mattson_compose: A needs one row per row of G0");
    for (const auto& r : a)
        if (r.size() != n1) throw DimensionError("mattson_compose: A rows must have the length of C1");
    std::vector<OctVector> rows;
    for (const auto& r : g1) {
        std::vector<std::uint8_t> v(n0, 0);
        v.insert(v.end(), r.coords().begin(), r.coords().end());
        rows.emplace_back(std::move(v));
    }
    for (std::size_t i = 0; i < g0.size(); ++i) {
        std::vector<std::uint8_t> v(g0[i].coords().begin(), g0[i].coords().end());
        v.insert(v.end(), a[i].coords().begin(), a[i].coords().end());
        rows.emplace_back(std::move(v));
    }
    return LinearCode(GeneratorMatrix(std::move(rows)));
}

[[nodiscard]] inline LinearCode direct_sum(const LinearCode& c0, const LinearCode& c1) {
    return mattson_compose(c0, c1, std::vector<OctVector>(c0.generators().row_count(), OctVector::zero(c1.length())));
}

/// Adds r(C) <= r(C0) + r(C1) for each metric with both exact summands; for a direct sum the
/// same value is also a lower bound.
inline void add_mattson_bounds(BoundLedger& composed, const BoundLedger& l0, const BoundLedger& l1, bool is_direct_sum) {
    for (auto m : kAllMetrics) {
        const auto& a = l0[m];
        const auto& b = l1[m];
        if (!a.exact || !b.exact) continue;
        composed.add_upper(m, *a.exact + *b.exact, "Mattson");
        if (is_direct_sum) composed.add_lower(m, *a.exact + *b.exact, "direct sum");
    }
}

struct TorsionBound {
    /// (r_E, r_HW) lower-bound claims; empty when a hypothesis fails.
    std::optional<std::pair<long long, long long>> claims;
    long long t = 0;
    std::string failed_hypothesis;
};

/// With t = min{floor(d1/8), floor(d2/18), 4 floor(d3/25), 16 floor(d4/25)}, claims r_E >= 9t and
/// r_HW >= 2t, provided d1 >= 8, d2 >= 18, d3 >= 25/4 and d4 >= 25/16. A zero derived code has no
/// distance and fails its hypothesis.
[[nodiscard]] inline TorsionBound torsion_lower_bound(const std::array<std::optional<unsigned>, 4>& d) {
    TorsionBound out;
    const char* names[4] = {"d1 >= 8", "d2 >= 18", "d3 >= 25/4", "d4 >= 25/16"};
    for (std::size_t i = 0; i < 4; ++i) {
        bool ok = d[i].has_value();
        if (ok) {
            const long long v = *d[i];
            ok = (i == 0 && v >= 8) || (i == 1 && v >= 18) || (i == 2 && 4 * v >= 25) || (i == 3 && 16 * v >= 25);
        }
        if (!ok) {
            out.failed_hypothesis = names[i];
            return out;
        }
    }
    out.t = std::min({static_cast<long long>(*d[0] / 8), static_cast<long long>(*d[1] / 18),
                      4 * static_cast<long long>(*d[2] / 25), 16 * static_cast<long long>(*d[3] / 25)});
    out.claims = std::make_pair(9 * out.t, 2 * out.t);
    return out;
}

[[nodiscard]] inline TorsionBound torsion_lower_bound(const LinearCode& code) {
    return torsion_lower_bound(torsion_distances(code).d);
}

}  // namespace octcode
