#pragma once

// Arithmetic over Z8 vectors: weights, distances, the Gray map, inner products.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octcode/errors.hpp"

namespace octcode {

inline constexpr unsigned kModulus = 8;

/// An element of Z8. Construction reduces mod 8, so the stored value is always in [0, 7].
class Residue {
public:
    constexpr Residue() = default;
    constexpr explicit Residue(long long v) : value_(static_cast<std::uint8_t>(((v % 8) + 8) % 8)) {}

    [[nodiscard]] constexpr unsigned value() const noexcept { return value_; }
    [[nodiscard]] constexpr bool is_unit() const noexcept { return (value_ & 1u) != 0; }

    /// 2-adic valuation in Z8; the zero element gets 3.
    [[nodiscard]] constexpr unsigned valuation() const noexcept {
        if (value_ == 0) return 3;
        unsigned v = 0;
        for (unsigned x = value_; (x & 1u) == 0; x >>= 1) ++v;
        return v;
    }

    friend constexpr Residue operator+(Residue a, Residue b) { return Residue(a.value_ + b.value_); }
    friend constexpr Residue operator-(Residue a, Residue b) { return Residue(8 + a.value_ - b.value_); }
    friend constexpr Residue operator*(Residue a, Residue b) { return Residue(a.value_ * b.value_); }
    friend constexpr Residue operator-(Residue a) { return Residue(8 - a.value_); }
    friend constexpr bool operator==(Residue, Residue) = default;
    friend constexpr auto operator<=>(Residue, Residue) = default;

private:
    std::uint8_t value_ = 0;
};

enum class Metric : std::uint8_t { hamming, lee, euclidean, homogeneous };

inline constexpr std::array<Metric, 4> kAllMetrics = {Metric::hamming, Metric::lee, Metric::euclidean,
                                                      Metric::homogeneous};

[[nodiscard]] constexpr std::string_view metric_name(Metric m) noexcept {
    switch (m) {
        case Metric::hamming: return "hamming";
        case Metric::lee: return "lee";
        case Metric::euclidean: return "euclidean";
        case Metric::homogeneous: return "homogeneous";
    }
    return "?";
}

/// Accepts the full names and the short forms h, l, e, hw, in any case.
[[nodiscard]] inline Metric parse_metric(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "hamming" || t == "h") return Metric::hamming;
    if (t == "lee" || t == "l") return Metric::lee;
    if (t == "euclidean" || t == "e") return Metric::euclidean;
    if (t == "homogeneous" || t == "hw") return Metric::homogeneous;
    throw ParseError("unknown metric '" + std::string(s) + "'");
}

namespace detail {

// w_HW(0) is 0: the printed case split (2 for x != 4) would give 2, which is not a weight
// and contradicts the Gray image of 0 being the zero word.
inline constexpr std::array<std::array<std::uint8_t, 8>, 4> kSymbolWeight = {{
    {0, 1, 1, 1, 1, 1, 1, 1},         // hamming
    {0, 1, 2, 3, 4, 3, 2, 1},         // lee
    {0, 1, 4, 9, 16, 9, 4, 1},        // euclidean
    {0, 2, 2, 2, 4, 2, 2, 2},         // homogeneous
}};

inline constexpr std::array<std::uint8_t, 8> kGrayNibble = {
    0b0000, 0b0101, 0b0011, 0b0110, 0b1111, 0b1010, 0b1100, 0b1001,
};

inline constexpr std::array<unsigned, 4> kMaxSymbolWeight = {1, 4, 16, 4};

}  // namespace detail

[[nodiscard]] constexpr unsigned symbol_weight(Residue x, Metric m) noexcept {
    return detail::kSymbolWeight[static_cast<std::size_t>(m)][x.value()];
}

/// Largest symbol weight under `m`; the covering radius of the zero code of length n is n times this.
[[nodiscard]] constexpr unsigned max_symbol_weight(Metric m) noexcept {
    return detail::kMaxSymbolWeight[static_cast<std::size_t>(m)];
}

/// Binary vector; used for Gray images and for codewords over Z2.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto& b : bits_) b &= 1u;
    }

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] unsigned operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    [[nodiscard]] std::size_t hamming_weight() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

[[nodiscard]] inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

/// A length-n vector over Z8 (n >= 1). Immutable: arithmetic returns new vectors.
class OctVector {
public:
    explicit OctVector(std::vector<std::uint8_t> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DimensionError("OctVector: length must be at least 1");
        for (auto& c : coords_) c &= 7u;
    }
    OctVector(std::initializer_list<int> coords) {
        coords_.reserve(coords.size());
        for (int c : coords) coords_.push_back(Residue(c).value());
        if (coords_.empty()) throw DimensionError("OctVector: length must be at least 1");
    }

    [[nodiscard]] static OctVector zero(std::size_t n) { return OctVector(std::vector<std::uint8_t>(n, 0)); }

    /// Parses the contiguous-digit text form, e.g. "01234567".
    [[nodiscard]] static OctVector parse(std::string_view text) {
        std::vector<std::uint8_t> c;
        c.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '7') throw ParseError("OctVector: invalid symbol '" + std::string(1, ch) + "'");
            c.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        if (c.empty()) throw ParseError("OctVector: empty text");
        return OctVector(std::move(c));
    }

    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] unsigned operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] Residue at(std::size_t i) const { return Residue(coords_.at(i)); }
    [[nodiscard]] std::span<const std::uint8_t> coords() const noexcept { return coords_; }
    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        s.reserve(coords_.size());
        for (auto c : coords_) s.push_back(static_cast<char>('0' + c));
        return s;
    }

    friend OctVector operator+(const OctVector& a, const OctVector& b) {
        check_same_length(a, b, "operator+");
        std::vector<std::uint8_t> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>((a.coords_[i] + b.coords_[i]) & 7u);
        return OctVector(std::move(r));
    }
    friend OctVector operator-(const OctVector& a, const OctVector& b) {
        check_same_length(a, b, "operator-");
        std::vector<std::uint8_t> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = static_cast<std::uint8_t>((8u + a.coords_[i] - b.coords_[i]) & 7u);
        return OctVector(std::move(r));
    }
    friend OctVector operator*(Residue s, const OctVector& a) {
        std::vector<std::uint8_t> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>((s.value() * a.coords_[i]) & 7u);
        return OctVector(std::move(r));
    }

    friend bool operator==(const OctVector&, const OctVector&) = default;
    friend auto operator<=>(const OctVector&, const OctVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const OctVector& v) { return os << v.to_string(); }

private:
    static void check_same_length(const OctVector& a, const OctVector& b, const char* op) {
        if (a.size() != b.size())
            throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()) + ")");
    }

    std::vector<std::uint8_t> coords_;
};

[[nodiscard]] inline unsigned weight(const OctVector& v, Metric m) noexcept {
    const auto& table = detail::kSymbolWeight[static_cast<std::size_t>(m)];
    unsigned w = 0;
    for (auto c : v.coords()) w += table[c];
    return w;
}

[[nodiscard]] inline unsigned distance(const OctVector& u, const OctVector& v, Metric m) {
    if (u.size() != v.size()) throw DimensionError("distance: length mismatch");
    const auto& table = detail::kSymbolWeight[static_cast<std::size_t>(m)];
    unsigned d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += table[(8u + u[i] - v[i]) & 7u];
    return d;
}

[[nodiscard]] inline BitVector gray_map(const OctVector& v) {
    std::vector<std::uint8_t> bits;
    bits.reserve(4 * v.size());
    for (auto c : v.coords()) {
        const unsigned nib = detail::kGrayNibble[c];
        for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((nib >> b) & 1u));
    }
    return BitVector(std::move(bits));
}

[[nodiscard]] inline Residue inner_product(const OctVector& u, const OctVector& v) {
    if (u.size() != v.size()) throw DimensionError("inner_product: length mismatch");
    unsigned s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return Residue(s);
}

/// Symbol counts ω0..ω7 of a vector.
struct Composition {
    std::array<std::size_t, 8> counts{};

    [[nodiscard]] std::size_t operator[](unsigned symbol) const { return counts.at(symbol); }
    [[nodiscard]] std::size_t total() const noexcept {
        return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    }
    friend bool operator==(const Composition&, const Composition&) = default;
};

[[nodiscard]] inline Composition composition(const OctVector& v) {
    Composition c;
    for (auto x : v.coords()) ++c.counts[x];
    return c;
}

}  // namespace octcode
