#pragma once

// Reduction and torsion codes of a Z8 code (over Z2 and Z4) and a structural verification report.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "octcode/code.hpp"

namespace octcode {

/// A code over Z2 or Z4 produced from a Z8 code.
class SubringCode {
public:
    /// Entries are reduced mod `modulus`; an empty generator list gives the zero code.
    SubringCode(unsigned modulus, std::size_t length, std::vector<detail::Row> generators)
        : modulus_(modulus), length_(length), generators_(std::move(generators)) {
        if (modulus != 2 && modulus != 4) throw ParameterError("SubringCode: modulus must be 2 or 4");
        for (auto& g : generators_) {
            if (g.size() != length) throw DimensionError("SubringCode: generator length mismatch");
            for (auto& x : g) x = static_cast<std::uint8_t>(x % modulus);
        }
        echelon_ = detail::echelonize(generators_, length_, modulus_);
    }

    [[nodiscard]] unsigned modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] const std::vector<detail::Row>& generators() const noexcept { return generators_; }
    [[nodiscard]] const detail::Echelon& echelon() const noexcept { return echelon_; }
    [[nodiscard]] std::size_t log2_cardinality() const { return echelon_.log2_cardinality(); }
    [[nodiscard]] bool is_zero() const { return echelon_.rows.empty(); }
    [[nodiscard]] bool contains(std::span<const std::uint8_t> v) const { return echelon_.contains(v); }

    template <class F>
    void for_each_word(F&& f) const {
        const std::size_t k = echelon_.rows.size();
        std::vector<unsigned> digit(k, 0), order(k);
        for (std::size_t i = 0; i < k; ++i) order[i] = modulus_ >> echelon_.pivot_val[i];
        detail::Row cur(length_, 0);
        for (;;) {
            f(std::span<const std::uint8_t>(cur));
            std::size_t i = 0;
            for (; i < k; ++i) {
                const auto& row = echelon_.rows[i];
                for (std::size_t c = 0; c < length_; ++c)
                    cur[c] = static_cast<std::uint8_t>((cur[c] + row[c]) % modulus_);
                if (++digit[i] < order[i]) break;
                digit[i] = 0;
            }
            if (i == k) break;
        }
    }

    [[nodiscard]] std::set<detail::Row> word_set() const {
        std::set<detail::Row> out;
        for_each_word([&](std::span<const std::uint8_t> w) { out.emplace(w.begin(), w.end()); });
        return out;
    }

    /// Minimum Hamming weight of a nonzero word; empty for the zero code.
    [[nodiscard]] std::optional<unsigned> min_hamming_distance() const {
        if (is_zero()) return std::nullopt;
        unsigned best = ~0u;
        for_each_word([&](std::span<const std::uint8_t> w) {
            unsigned s = 0;
            for (auto x : w) s += (x != 0);
            if (s != 0 && s < best) best = s;
        });
        return best;
    }

    [[nodiscard]] bool includes(const SubringCode& other) const {
        if (other.modulus_ != modulus_ || other.length_ != length_) return false;
        for (const auto& g : other.generators_)
            if (!contains(g)) return false;
        return true;
    }

    friend bool operator==(const SubringCode& a, const SubringCode& b) { return a.includes(b) && b.includes(a); }

private:
    unsigned modulus_;
    std::size_t length_;
    std::vector<detail::Row> generators_;
    detail::Echelon echelon_;
};

enum class DerivedTag : std::uint8_t { tor0, tor1, tor2, c1, c2, c3, c4, c21, c22, c31, c32 };

inline constexpr std::array<DerivedTag, 11> kAllDerivedTags = {
    DerivedTag::tor0, DerivedTag::tor1, DerivedTag::tor2, DerivedTag::c1,  DerivedTag::c2, DerivedTag::c3,
    DerivedTag::c4,   DerivedTag::c21,  DerivedTag::c22,  DerivedTag::c31, DerivedTag::c32};

[[nodiscard]] constexpr std::string_view tag_name(DerivedTag t) noexcept {
    constexpr std::array<std::string_view, 11> names = {"Tor0", "Tor1", "Tor2", "C1",  "C2", "C3",
                                                        "C4",   "C21",  "C22",  "C31", "C32"};
    return names[static_cast<std::size_t>(t)];
}

[[nodiscard]] constexpr unsigned tag_modulus(DerivedTag t) noexcept {
    return (t == DerivedTag::c2 || t == DerivedTag::c3) ? 4 : 2;
}

namespace detail {

// Rows of the standard form at pivot level `level`, divided by 2^shift and reduced mod `modulus`,
// in original coordinates.
inline void append_level(std::vector<Row>& out, const Echelon& e, unsigned level, unsigned shift, unsigned modulus) {
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivot_val[k] != level) continue;
        Row r(e.rows[k].size());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = static_cast<std::uint8_t>((e.rows[k][c] >> shift) % modulus);
        out.push_back(std::move(r));
    }
}

}  // namespace detail

/// Generator matrix of a derived code assembled from the standard-form blocks:
///   C1 = [I B01 B02 B03] (mod 2), C2 = unit rows and 2-rows mod 4,
///   C3 = unit rows, 2-rows / 2 and 4-rows / 2 mod 4, C4 = unit rows, 2-rows / 2, 4-rows / 4 mod 2,
///   Tor0 = C21 = C1, Tor1 = C22 = C31 = unit rows and 2-rows / 2 mod 2, Tor2 = C32 = C4.
[[nodiscard]] inline SubringCode derive(const LinearCode& code, DerivedTag tag) {
    using detail::append_level;
    const auto& e = code.echelon();
    std::vector<detail::Row> g;
    switch (tag) {
        case DerivedTag::tor0:
        case DerivedTag::c1:
        case DerivedTag::c21:
            append_level(g, e, 0, 0, 2);
            break;
        case DerivedTag::tor1:
        case DerivedTag::c22:
        case DerivedTag::c31:
            append_level(g, e, 0, 0, 2);
            append_level(g, e, 1, 1, 2);
            break;
        case DerivedTag::tor2:
        case DerivedTag::c4:
        case DerivedTag::c32:
            append_level(g, e, 0, 0, 2);
            append_level(g, e, 1, 1, 2);
            append_level(g, e, 2, 2, 2);
            break;
        case DerivedTag::c2:
            append_level(g, e, 0, 0, 4);
            append_level(g, e, 1, 0, 4);
            break;
        case DerivedTag::c3:
            append_level(g, e, 0, 0, 4);
            append_level(g, e, 1, 1, 4);
            append_level(g, e, 2, 1, 4);
            break;
    }
    return SubringCode(tag_modulus(tag), code.length(), std::move(g));
}

namespace detail {

using WordSet = std::set<Row>;

template <class F>
void for_each_vector(std::size_t n, unsigned modulus, F&& f) {
    Row v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++v[i] < modulus) break;
            v[i] = 0;
        }
        if (i == n) break;
    }
}

[[nodiscard]] inline WordSet reduce_all(const WordSet& words, unsigned modulus) {
    WordSet out;
    for (auto w : words) {
        for (auto& x : w) x = static_cast<std::uint8_t>(x % modulus);
        out.insert(std::move(w));
    }
    return out;
}

// {c in Z_m^n : factor * c (mod target) in words}
[[nodiscard]] inline WordSet preimage(const WordSet& words, std::size_t n, unsigned m, unsigned factor,
                                      unsigned target) {
    WordSet out;
    for_each_vector(n, m, [&](const Row& c) {
        Row img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((factor * c[i]) % target);
        if (words.count(img)) out.insert(c);
    });
    return out;
}

}  // namespace detail

/// Largest length for which derived codes are cross-checked against their set definitions.
inline constexpr std::size_t kComprehensionMaxLength = 6;

/// The derived code computed from its set definition by exhaustive enumeration, independent of the
/// standard form. Codeword sets for Z2 codes are returned with entries in {0,1}, Z4 codes in {0..3}.
[[nodiscard]] inline std::set<detail::Row> derive_by_comprehension(const LinearCode& code, DerivedTag tag) {
    using namespace detail;
    const std::size_t n = code.length();
    if (n > kComprehensionMaxLength)
        throw BudgetError("comprehension check limited to length " + std::to_string(kComprehensionMaxLength),
                          static_cast<double>(n), static_cast<double>(kComprehensionMaxLength));
    WordSet c;
    for_each_codeword(code, [&](std::span<const std::uint8_t> w) { c.emplace(w.begin(), w.end()); });

    // 2^i v depends only on v mod 2^(3-i).
    const auto tor = [&](unsigned i) { return reduce_all(preimage(c, n, 8u >> i, 1u << i, 8), 2); };
    const auto c2 = [&] { return reduce_all(c, 4); };
    const auto c3 = [&] { return preimage(c, n, 4, 2, 8); };

    switch (tag) {
        case DerivedTag::tor0: return tor(0);
        case DerivedTag::tor1: return tor(1);
        case DerivedTag::tor2: return tor(2);
        case DerivedTag::c1: return reduce_all(c, 2);
        case DerivedTag::c2: return c2();
        case DerivedTag::c3: return c3();
        case DerivedTag::c4: return preimage(c, n, 2, 4, 8);
        case DerivedTag::c21: return reduce_all(c2(), 2);
        case DerivedTag::c22: return preimage(c2(), n, 2, 2, 4);
        case DerivedTag::c31: return reduce_all(c3(), 2);
        case DerivedTag::c32: return preimage(c3(), n, 2, 2, 4);
    }
    return {};
}

/// Minimum Hamming distances of C1..C4; an entry is empty when that code is the zero code.
struct TorsionDistances {
    std::array<std::optional<unsigned>, 4> d{};
};

[[nodiscard]] inline TorsionDistances torsion_distances(const LinearCode& code) {
    TorsionDistances out;
    const DerivedTag tags[4] = {DerivedTag::c1, DerivedTag::c2, DerivedTag::c3, DerivedTag::c4};
    for (std::size_t i = 0; i < 4; ++i) out.d[i] = derive(code, tags[i]).min_hamming_distance();
    return out;
}

enum class CheckVerdict : std::uint8_t { pass, fail, skipped };

[[nodiscard]] constexpr std::string_view verdict_name(CheckVerdict v) noexcept {
    switch (v) {
        case CheckVerdict::pass: return "pass";
        case CheckVerdict::fail: return "fail";
        case CheckVerdict::skipped: return "skipped";
    }
    return "?";
}

struct StructureCheck {
    std::string name;
    std::string claimed_by;
    CheckVerdict verdict = CheckVerdict::skipped;
    std::optional<std::string> witness;
};

struct StructureReport {
    std::size_t length = 0;
    CodeType type{};
    std::size_t log2_cardinality = 0;
    std::array<std::size_t, 11> derived_log2_cardinality{};
    bool self_orthogonal = false;
    bool self_dual = false;
    TorsionDistances distances;
    std::vector<StructureCheck> checks;

    [[nodiscard]] std::size_t count(CheckVerdict v) const {
        std::size_t k = 0;
        for (const auto& c : checks) k += (c.verdict == v);
        return k;
    }
    [[nodiscard]] const StructureCheck* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

[[nodiscard]] inline std::string row_text(const Row& r) {
    std::string s;
    for (auto x : r) s.push_back(static_cast<char>('0' + x));
    return s;
}

// Generator of `small` missing from `big`, if any.
[[nodiscard]] inline std::optional<std::string> inclusion_witness(const SubringCode& small, const SubringCode& big) {
    for (const auto& g : small.generators())
        if (!big.contains(g)) return row_text(g);
    return std::nullopt;
}

// Generator pair (a from x, b from y) with nonzero inner product mod m, if any.
[[nodiscard]] inline std::optional<std::string> orthogonality_witness(const SubringCode& x, const SubringCode& y) {
    for (const auto& a : x.generators())
        for (const auto& b : y.generators())
            if (inner_mod(a, b, x.modulus()) != 0) return row_text(a) + "." + row_text(b);
    return std::nullopt;
}

}  // namespace detail

/// Evaluates the structural identities of the derived codes on `code`. Hypothesis-dependent checks
/// (self-orthogonal, self-dual) are listed as skipped when the hypothesis does not hold.
[[nodiscard]] inline StructureReport structure_report(const LinearCode& code) {
    using detail::inclusion_witness;
    using detail::orthogonality_witness;
    StructureReport rep;
    rep.length = code.length();
    rep.type = code.type();
    rep.log2_cardinality = code.log2_cardinality();
    rep.self_orthogonal = is_self_orthogonal(code);
    rep.self_dual = is_self_dual(code);
    rep.distances = torsion_distances(code);

    std::array<std::optional<SubringCode>, 11> d;
    for (auto t : kAllDerivedTags) {
        d[static_cast<std::size_t>(t)].emplace(derive(code, t));
        rep.derived_log2_cardinality[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(t)]->log2_cardinality();
    }
    const auto& at = [&](DerivedTag t) -> const SubringCode& { return *d[static_cast<std::size_t>(t)]; };
    const auto lc = [&](DerivedTag t) { return at(t).log2_cardinality(); };

    auto add = [&](std::string name, std::string by, bool ok, std::optional<std::string> witness = std::nullopt) {
        rep.checks.push_back({std::move(name), std::move(by), ok ? CheckVerdict::pass : CheckVerdict::fail,
                              ok ? std::nullopt : std::move(witness)});
    };
    auto skip = [&](std::string name, std::string by, std::string why) {
        rep.checks.push_back({std::move(name), std::move(by), CheckVerdict::skipped, std::move(why)});
    };
    auto sizes = [&](std::initializer_list<DerivedTag> ts) {
        std::string s = "log2|C|=" + std::to_string(rep.log2_cardinality);
        for (auto t : ts) s += ",log2|" + std::string(tag_name(t)) + "|=" + std::to_string(lc(t));
        return s;
    };
    auto include = [&](std::string name, std::string by, DerivedTag small, DerivedTag big) {
        auto w = inclusion_witness(at(small), at(big));
        add(std::move(name), std::move(by), !w, w);
    };
    auto equal = [&](std::string name, std::string by, DerivedTag a, DerivedTag b) {
        auto w = inclusion_witness(at(a), at(b));
        if (!w) w = inclusion_witness(at(b), at(a));
        add(std::move(name), std::move(by), !w, w);
    };
    auto self_orth = [&](std::string name, std::string by, DerivedTag t) {
        auto w = orthogonality_witness(at(t), at(t));
        add(std::move(name), std::move(by), !w, w);
    };
    auto orth = [&](std::string name, std::string by, DerivedTag x, DerivedTag y) {
        auto w = orthogonality_witness(at(x), at(y));
        add(std::move(name), std::move(by), !w, w);
    };

    using T = DerivedTag;
    const std::string card = "cardinality identity";
    add("|C| = |C1||C3|", card, rep.log2_cardinality == lc(T::c1) + lc(T::c3), sizes({T::c1, T::c3}));
    add("|C| = |C2||C4|", card, rep.log2_cardinality == lc(T::c2) + lc(T::c4), sizes({T::c2, T::c4}));
    const auto& ty = rep.type;
    add("|C| = |Tor0||Tor1||Tor2| = 2^(3k0+2k1+k2)", "torsion cardinality product",
        rep.log2_cardinality == lc(T::tor0) + lc(T::tor1) + lc(T::tor2) &&
            rep.log2_cardinality == 3 * ty.k0 + 2 * ty.k1 + ty.k2,
        sizes({T::tor0, T::tor1, T::tor2}));
    add("|C1|,|C2|,|C3|,|C4| = 2^k0, 4^k0 2^k1, 4^(k0+k1) 2^k2, 2^(k0+k1+k2)", card,
        lc(T::c1) == ty.k0 && lc(T::c2) == 2 * ty.k0 + ty.k1 && lc(T::c3) == 2 * (ty.k0 + ty.k1) + ty.k2 &&
            lc(T::c4) == ty.rank(),
        sizes({T::c1, T::c2, T::c3, T::c4}));

    const std::string chain = "reduction and torsion inclusions";
    include("C1 in C4", chain, T::c1, T::c4);
    include("C2 in C3", chain, T::c2, T::c3);

    const std::string second = "second-level derived codes";
    equal("C21 = C1", second, T::c21, T::c1);
    include("C1 in C22", second, T::c1, T::c22);
    equal("C31 = C22", second, T::c31, T::c22);
    include("C31 in C32", second, T::c31, T::c32);
    equal("C32 = C4", second, T::c32, T::c4);

    if (code.length() <= kComprehensionMaxLength) {
        for (auto t : kAllDerivedTags) {
            const auto expected = derive_by_comprehension(code, t);
            const auto got = at(t).word_set();
            std::optional<std::string> w;
            if (expected != got) {
                for (const auto& x : expected)
                    if (!got.count(x)) {
                        w = "missing " + detail::row_text(x);
                        break;
                    }
                if (!w)
                    for (const auto& x : got)
                        if (!expected.count(x)) {
                            w = "extra " + detail::row_text(x);
                            break;
                        }
            }
            add(std::string(tag_name(t)) + " generators match set definition", "generator construction", !w, w);
        }
    } else {
        for (auto t : kAllDerivedTags)
            skip(std::string(tag_name(t)) + " generators match set definition", "generator construction",
                 "length exceeds " + std::to_string(kComprehensionMaxLength));
    }

    const std::string so = "self-orthogonal derived codes";
    const std::string perp = "torsion codes inside duals";
    const std::string chains = "second-level chains";
    if (rep.self_orthogonal) {
        self_orth("C1 self-orthogonal over Z2", so, T::c1);
        self_orth("C4 self-orthogonal over Z2", so, T::c4);
        self_orth("C2 self-orthogonal over Z4", so, T::c2);
        self_orth("C3 self-orthogonal over Z4", so, T::c3);
        orth("C4 in C1^perp", perp, T::c4, T::c1);
        orth("C3 in C2^perp", perp, T::c3, T::c2);
        {
            auto w = inclusion_witness(at(T::c21), at(T::c22));
            if (!w) w = orthogonality_witness(at(T::c22), at(T::c21));
            add("C21 in C22 in C21^perp", chains, !w, w);
        }
        {
            auto w = inclusion_witness(at(T::c31), at(T::c32));
            if (!w) w = orthogonality_witness(at(T::c32), at(T::c31));
            add("C31 in C32 in C31^perp", chains, !w, w);
        }
    } else {
        for (const char* name : {"C1 self-orthogonal over Z2", "C4 self-orthogonal over Z2",
                                 "C2 self-orthogonal over Z4", "C3 self-orthogonal over Z4"})
            skip(name, so, "code is not self-orthogonal");
        skip("C4 in C1^perp", perp, "code is not self-orthogonal");
        skip("C3 in C2^perp", perp, "code is not self-orthogonal");
        skip("C21 in C22 in C21^perp", chains, "code is not self-orthogonal");
        skip("C31 in C32 in C31^perp", chains, "code is not self-orthogonal");
    }

    const std::string sd = "self-dual duality of derived codes";
    if (rep.self_dual) {
        auto w1 = orthogonality_witness(at(T::c4), at(T::c1));
        const bool ok1 = !w1 && lc(T::c4) + lc(T::c1) == code.length();
        add("C4 = C1^perp", sd, ok1, w1 ? w1 : std::optional<std::string>(sizes({T::c1, T::c4})));
        auto w2 = orthogonality_witness(at(T::c3), at(T::c2));
        const bool ok2 = !w2 && lc(T::c3) + lc(T::c2) == 2 * code.length();
        add("C3 = C2^perp", sd, ok2, w2 ? w2 : std::optional<std::string>(sizes({T::c2, T::c3})));
    } else {
        skip("C4 = C1^perp", sd, "code is not self-dual");
        skip("C3 = C2^perp", sd, "code is not self-dual");
    }
    return rep;
}

}  // namespace octcode
