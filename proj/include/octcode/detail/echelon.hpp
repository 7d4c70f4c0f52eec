#pragma once

// Row reduction over Z_{2^s}, s in {1,2,3}. Shared by codes over Z8 and their Z2/Z4 derivatives.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "octcode/errors.hpp"

namespace octcode::detail {

using Row = std::vector<std::uint8_t>;

[[nodiscard]] constexpr unsigned modulus_bits(unsigned modulus) {
    switch (modulus) {
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default: throw ParameterError("modulus must be 2, 4 or 8");
    }
}

/// 2-adic valuation of x in Z_{2^s}; zero maps to s.
[[nodiscard]] constexpr unsigned valuation(unsigned x, unsigned s) {
    if (x == 0) return s;
    unsigned v = 0;
    while ((x & 1u) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

[[nodiscard]] constexpr unsigned unit_inverse(unsigned u, unsigned modulus) {
    for (unsigned y = 1; y < modulus; y += 2)
        if ((u * y) % modulus == 1) return y;
    throw ConsistencyError("unit_inverse: argument is not a unit");
}

[[nodiscard]] inline unsigned inner_mod(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                                        unsigned modulus) {
    unsigned s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s % modulus;
}

inline void axpy(Row& y, unsigned q, const Row& x, unsigned modulus) {
    // y <- y - q*x
    for (std::size_t c = 0; c < y.size(); ++c)
        y[c] = static_cast<std::uint8_t>((y[c] + modulus * modulus - (q * x[c]) % modulus) % modulus);
}

/// Reduced generator set of a code over Z_{2^s}, kept in original coordinates.
///
/// Row k has pivot entry 2^pivot_val[k] in column pivot_col[k]; rows are ordered by
/// pivot valuation, every later row is zero in earlier pivot columns, and an earlier row's entry in a
/// later pivot column is reduced below that pivot. Permuting the pivot columns to the front gives the
/// block-triangular standard form.
struct Echelon {
    unsigned modulus = 8;
    std::size_t length = 0;
    std::vector<Row> rows;
    std::vector<std::size_t> pivot_col;
    std::vector<unsigned> pivot_val;

    [[nodiscard]] unsigned bits() const { return modulus_bits(modulus); }

    /// Number of rows with pivot 2^level.
    [[nodiscard]] std::size_t count_at(unsigned level) const {
        std::size_t k = 0;
        for (auto v : pivot_val) k += (v == level);
        return k;
    }

    [[nodiscard]] std::size_t log2_cardinality() const {
        std::size_t total = 0;
        for (auto v : pivot_val) total += bits() - v;
        return total;
    }

    /// Pivot columns in order, then the remaining columns ascending.
    [[nodiscard]] std::vector<std::size_t> permutation() const {
        std::vector<std::size_t> perm(pivot_col);
        std::vector<bool> used(length, false);
        for (auto c : pivot_col) used[c] = true;
        for (std::size_t c = 0; c < length; ++c)
            if (!used[c]) perm.push_back(c);
        return perm;
    }

    [[nodiscard]] bool contains(std::span<const std::uint8_t> v) const {
        if (v.size() != length) throw DimensionError("contains: length mismatch");
        Row w(v.begin(), v.end());
        for (auto& x : w) x = static_cast<std::uint8_t>(x % modulus);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const unsigned e = w[pivot_col[k]];
            const unsigned step = 1u << pivot_val[k];
            if (e % step != 0) return false;
            if (e != 0) axpy(w, e / step, rows[k], modulus);
        }
        return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
    }
};

/// Gaussian elimination over Z_{2^s}: unit pivots first, then valuation 1, then valuation 2.
/// At each level the leftmost eligible column wins, then the lowest row index; pivot rows are
/// scaled so the pivot is exactly 2^level. Zero rows are dropped.
[[nodiscard]] inline Echelon echelonize(std::vector<Row> rows, std::size_t length, unsigned modulus) {
    const unsigned s = modulus_bits(modulus);
    for (auto& row : rows) {
        if (row.size() != length) throw DimensionError("echelonize: ragged matrix");
        for (auto& x : row) x = static_cast<std::uint8_t>(x % modulus);
    }

    Echelon e;
    e.modulus = modulus;
    e.length = length;
    std::vector<bool> used(length, false);
    std::size_t r = 0;

    for (unsigned level = 0; level < s; ++level) {
        for (;;) {
            std::size_t pc = length, pr = rows.size();
            for (std::size_t c = 0; c < length && pc == length; ++c) {
                if (used[c]) continue;
                for (std::size_t i = r; i < rows.size(); ++i) {
                    if (valuation(rows[i][c], s) == level) {
                        pc = c;
                        pr = i;
                        break;
                    }
                }
            }
            if (pc == length) break;

            std::swap(rows[r], rows[pr]);
            const unsigned unit = rows[r][pc] >> level;
            const unsigned inv = unit_inverse(unit % modulus, modulus);
            for (auto& x : rows[r]) x = static_cast<std::uint8_t>((x * inv) % modulus);

            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r) continue;
                const unsigned q = rows[i][pc] >> level;
                if (q != 0) axpy(rows[i], q, rows[r], modulus);
            }
            used[pc] = true;
            e.pivot_col.push_back(pc);
            e.pivot_val.push_back(level);
            ++r;
        }
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        for (auto x : rows[i])
            if (x != 0) throw ConsistencyError("echelonize: residual row is not zero");
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

}  // namespace octcode::detail
