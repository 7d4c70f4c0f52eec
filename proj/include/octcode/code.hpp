#pragma once

// Linear codes over Z8: generator matrices, standard form, enumeration, duals, weight data.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octcode/detail/echelon.hpp"
#include "octcode/errors.hpp"
#include "octcode/ring.hpp"

namespace octcode {

/// Largest codeword count any enumerating routine accepts unless the caller passes its own limit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 26;

/// Rows generating a code; at least one row, all of equal length. Rows need not be independent.
class GeneratorMatrix {
public:
    explicit GeneratorMatrix(std::vector<OctVector> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw ParameterError("generator matrix needs at least one row");
        for (const auto& r : rows_)
            if (r.size() != rows_.front().size()) throw DimensionError("generator matrix rows differ in length");
    }

    [[nodiscard]] std::size_t length() const noexcept { return rows_.front().size(); }
    [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
    [[nodiscard]] const std::vector<OctVector>& rows() const noexcept { return rows_; }
    [[nodiscard]] const OctVector& operator[](std::size_t i) const { return rows_.at(i); }

    /// Text format: one row per line, digits 0-7 separated by spaces; lines starting with '#' are comments.
    [[nodiscard]] static GeneratorMatrix parse(std::string_view text) {
        std::vector<OctVector> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream tokens(line);
            std::string tok;
            std::vector<std::uint8_t> coords;
            while (tokens >> tok) {
                if (tok.size() != 1 || tok[0] < '0' || tok[0] > '7')
                    throw ParseError("matrix line " + std::to_string(lineno) + ": invalid entry '" + tok + "'");
                coords.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
            }
            if (!rows.empty() && rows.front().size() != coords.size())
                throw ParseError("matrix line " + std::to_string(lineno) + ": row length " +
                                 std::to_string(coords.size()) + " differs from " +
                                 std::to_string(rows.front().size()));
            rows.emplace_back(std::move(coords));
        }
        if (rows.empty()) throw ParameterError("matrix text contains no rows");
        return GeneratorMatrix(std::move(rows));
    }

    [[nodiscard]] std::string to_text() const {
        std::string out;
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out.push_back(' ');
                out.push_back(static_cast<char>('0' + r[i]));
            }
            out.push_back('\n');
        }
        return out;
    }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::vector<OctVector> rows_;
};

/// Block sizes {k0, k1, k2} of the standard form; the code has 8^k0 4^k1 2^k2 words.
struct CodeType {
    std::size_t k0 = 0, k1 = 0, k2 = 0;

    [[nodiscard]] std::size_t log2_cardinality() const noexcept { return 3 * k0 + 2 * k1 + k2; }
    [[nodiscard]] std::size_t rank() const noexcept { return k0 + k1 + k2; }
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// Generator matrix in block form
///
///     [ I   A01   A02   A03  ]
///     [ 0   2I    2A12  2A13 ]
///     [ 0   0     4I    4A23 ]
///
/// on permuted coordinates: column j of `rows` is original column `column_permutation[j]`.
/// `block(i, j)` returns A_ij with the row multiplier 2^i divided out. A12 and A23 are binary;
/// A01 is binary, A02 has entries in Z4 and A03 in Z8; A13 has entries in Z4 (a multiple of 2 in
/// the last column block cannot always be reduced to 0 or 2).
class StandardForm {
public:
    StandardForm() = default;
    StandardForm(std::size_t length, CodeType type, std::vector<OctVector> rows, std::vector<std::size_t> perm)
        : length_(length), type_(type), rows_(std::move(rows)), perm_(std::move(perm)) {}

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] const CodeType& type() const noexcept { return type_; }
    [[nodiscard]] const std::vector<OctVector>& rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& column_permutation() const noexcept { return perm_; }

    /// Half-open column range of block j in {0,1,2,3}.
    [[nodiscard]] std::pair<std::size_t, std::size_t> column_block(unsigned j) const {
        const std::size_t b[5] = {0, type_.k0, type_.k0 + type_.k1, type_.rank(), length_};
        if (j > 3) throw ParameterError("column block index out of range");
        return {b[j], b[j + 1]};
    }

    /// Half-open row range of block i in {0,1,2}.
    [[nodiscard]] std::pair<std::size_t, std::size_t> row_block(unsigned i) const {
        if (i > 2) throw ParameterError("row block index out of range");
        return column_block(i);
    }

    [[nodiscard]] std::vector<std::vector<std::uint8_t>> block(unsigned i, unsigned j) const {
        if (j <= i || j > 3) throw ParameterError("A_ij is defined for 0 <= i < j <= 3");
        const auto [r0, r1] = row_block(i);
        const auto [c0, c1] = column_block(j);
        std::vector<std::vector<std::uint8_t>> out;
        for (std::size_t r = r0; r < r1; ++r) {
            std::vector<std::uint8_t> row;
            for (std::size_t c = c0; c < c1; ++c) row.push_back(static_cast<std::uint8_t>(rows_[r][c] >> i));
            out.push_back(std::move(row));
        }
        return out;
    }

    /// Bit `bit` of A_0j, so that A_0j = B_0j + 2 B1_0j + 4 B2_0j with bit = 0, 1, 2.
    [[nodiscard]] std::vector<std::vector<std::uint8_t>> binary_part(unsigned j, unsigned bit) const {
        if (bit > 2) throw ParameterError("binary_part: bit must be 0, 1 or 2");
        auto a = block(0, j);
        for (auto& row : a)
            for (auto& x : row) x = static_cast<std::uint8_t>((x >> bit) & 1u);
        return a;
    }

    [[nodiscard]] std::vector<OctVector> rows_in_original_coordinates() const {
        std::vector<OctVector> out;
        for (const auto& r : rows_) {
            std::vector<std::uint8_t> v(length_);
            for (std::size_t j = 0; j < length_; ++j) v[perm_[j]] = static_cast<std::uint8_t>(r[j]);
            out.emplace_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t length_ = 0;
    CodeType type_{};
    std::vector<OctVector> rows_;
    std::vector<std::size_t> perm_;
};

namespace detail {

[[nodiscard]] inline std::vector<Row> to_rows(const std::vector<OctVector>& vs) {
    std::vector<Row> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.emplace_back(v.coords().begin(), v.coords().end());
    return out;
}

[[nodiscard]] inline StandardForm make_standard_form(const Echelon& e) {
    const auto perm = e.permutation();
    std::vector<OctVector> rows;
    for (const auto& r : e.rows) {
        std::vector<std::uint8_t> v(e.length);
        for (std::size_t j = 0; j < e.length; ++j) v[j] = r[perm[j]];
        rows.emplace_back(std::move(v));
    }
    return StandardForm(e.length, CodeType{e.count_at(0), e.count_at(1), e.count_at(2)}, std::move(rows), perm);
}

}  // namespace detail

[[nodiscard]] inline StandardForm standard_form(const GeneratorMatrix& g) {
    return detail::make_standard_form(detail::echelonize(detail::to_rows(g.rows()), g.length(), 8));
}

/// A linear code over Z8. Immutable; the standard form is computed once, on first use, and
/// shared between copies.
class LinearCode {
public:
    explicit LinearCode(GeneratorMatrix generators)
        : generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {}

    [[nodiscard]] static LinearCode zero(std::size_t n) { return LinearCode(GeneratorMatrix({OctVector::zero(n)})); }

    [[nodiscard]] static LinearCode full(std::size_t n) {
        std::vector<OctVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint8_t> v(n, 0);
            v[i] = 1;
            rows.emplace_back(std::move(v));
        }
        return LinearCode(GeneratorMatrix(std::move(rows)));
    }

    [[nodiscard]] std::size_t length() const noexcept { return generators_.length(); }
    [[nodiscard]] const GeneratorMatrix& generators() const noexcept { return generators_; }

    [[nodiscard]] const detail::Echelon& echelon() const {
        ensure();
        return lazy_->echelon;
    }
    [[nodiscard]] const StandardForm& standard_form() const {
        ensure();
        return lazy_->form;
    }

    [[nodiscard]] CodeType type() const { return standard_form().type(); }
    [[nodiscard]] std::size_t log2_cardinality() const { return echelon().log2_cardinality(); }
    [[nodiscard]] bool is_zero() const { return echelon().rows.empty(); }

    /// Exact word count; refuses codes with 2^63 or more words.
    [[nodiscard]] std::uint64_t cardinality() const {
        const auto l = log2_cardinality();
        if (l >= 63) throw BudgetError("cardinality 2^" + std::to_string(l) + " does not fit in 64 bits",
                                       static_cast<double>(l), 62.0);
        return std::uint64_t{1} << l;
    }

    [[nodiscard]] bool contains(const OctVector& v) const { return echelon().contains(v.coords()); }

private:
    struct Lazy {
        std::once_flag once;
        detail::Echelon echelon;
        StandardForm form;
    };

    void ensure() const {
        std::call_once(lazy_->once, [this] {
            lazy_->echelon = detail::echelonize(detail::to_rows(generators_.rows()), generators_.length(), 8);
            lazy_->form = detail::make_standard_form(lazy_->echelon);
        });
    }

    GeneratorMatrix generators_;
    std::shared_ptr<Lazy> lazy_;
};

/// Calls f(span of the current codeword) once per codeword. Words are produced in original coordinates
/// by an odometer over coefficients: Z8 on unit rows, Z4 on 2-rows, Z2 on 4-rows.
template <class F>
void for_each_codeword(const LinearCode& code, F&& f, std::uint64_t limit = kDefaultEnumerationLimit) {
    const auto& e = code.echelon();
    if (e.log2_cardinality() >= 63 || (std::uint64_t{1} << e.log2_cardinality()) > limit)
        throw BudgetError("codeword enumeration exceeds limit", std::ldexp(1.0, static_cast<int>(e.log2_cardinality())),
                          static_cast<double>(limit));
    const std::size_t n = e.length;
    const std::size_t k = e.rows.size();
    std::vector<unsigned> digit(k, 0), order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = 8u >> e.pivot_val[i];
    detail::Row cur(n, 0);
    for (;;) {
        f(std::span<const std::uint8_t>(cur));
        std::size_t i = 0;
        for (; i < k; ++i) {
            const auto& row = e.rows[i];
            for (std::size_t c = 0; c < n; ++c) cur[c] = static_cast<std::uint8_t>((cur[c] + row[c]) & 7u);
            if (++digit[i] < order[i]) break;
            digit[i] = 0;
        }
        if (i == k) break;
    }
}

[[nodiscard]] inline std::vector<OctVector> codewords(const LinearCode& code,
                                                      std::uint64_t limit = kDefaultEnumerationLimit) {
    std::vector<OctVector> out;
    for_each_codeword(
        code, [&](std::span<const std::uint8_t> w) { out.emplace_back(std::vector<std::uint8_t>(w.begin(), w.end())); },
        limit);
    return out;
}

namespace detail {

// Solves the pivot coordinates of row blocks `top_block`..0 by back substitution so that every
// standard-form row is orthogonal to x. Entries of x in later column blocks must already be set.
inline void back_substitute(const StandardForm& sf, Row& x, unsigned top_block) {
    for (int b = static_cast<int>(top_block); b >= 0; --b) {
        const auto [r0, r1] = sf.row_block(static_cast<unsigned>(b));
        for (std::size_t r = r0; r < r1; ++r) {
            unsigned rest = 0;
            for (std::size_t c = 0; c < sf.length(); ++c)
                if (c != r) rest += sf.rows()[r][c] * x[c];
            rest &= 7u;
            if (rest % (1u << b) != 0) throw ConsistencyError("dual: standard form row is not divisible by its pivot");
            x[r] = static_cast<std::uint8_t>((8u - (rest >> b)) & 7u);
        }
    }
}

[[nodiscard]] inline bool dual_is_valid(const LinearCode& code, const LinearCode& dual) {
    if (code.log2_cardinality() + dual.log2_cardinality() != 3 * code.length()) return false;
    for (const auto& h : dual.generators().rows())
        for (const auto& g : code.generators().rows())
            if (inner_product(g, h).value() != 0) return false;
    return true;
}

}  // namespace detail

/// The annihilator code. Built from the standard form (dual type (n-k0-k1-k2, k2, k1)), then
/// checked for orthogonality and |C||C^perp| = 8^n. If the check fails and n <= 6, the kernel is
/// found by exhaustive search; otherwise a ConsistencyError is thrown.
[[nodiscard]] inline LinearCode dual(const LinearCode& code) {
    const auto& sf = code.standard_form();
    const auto t = sf.type();
    const std::size_t n = sf.length();
    const std::size_t c2 = t.k0 + t.k1, c3 = t.rank();
    std::vector<detail::Row> gens;

    for (std::size_t j = c3; j < n; ++j) {  // unit rows: free coordinate in the last block
        detail::Row x(n, 0);
        x[j] = 1;
        detail::back_substitute(sf, x, 2);
        gens.push_back(std::move(x));
    }
    for (std::size_t j = c2; j < c3; ++j) {  // order-4 rows: 2 on a 4-pivot column
        detail::Row x(n, 0);
        x[j] = 2;
        detail::back_substitute(sf, x, 1);
        gens.push_back(std::move(x));
    }
    for (std::size_t j = t.k0; j < c2; ++j) {  // order-2 rows: 4 on a 2-pivot column
        detail::Row x(n, 0);
        x[j] = 4;
        detail::back_substitute(sf, x, 0);
        gens.push_back(std::move(x));
    }

    std::vector<OctVector> rows;
    const auto& perm = sf.column_permutation();
    for (const auto& x : gens) {
        std::vector<std::uint8_t> v(n);
        for (std::size_t j = 0; j < n; ++j) v[perm[j]] = x[j];
        rows.emplace_back(std::move(v));
    }
    if (rows.empty()) rows.push_back(OctVector::zero(n));
    LinearCode result{GeneratorMatrix(std::move(rows))};
    if (detail::dual_is_valid(code, result)) return result;

    if (n > 6) throw ConsistencyError("dual: block construction failed verification");
    std::vector<OctVector> kernel;
    std::vector<std::uint8_t> x(n, 0);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (3 * n)); ++idx) {
        for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((idx >> (3 * i)) & 7u);
        OctVector v(x);
        bool ok = true;
        for (const auto& g : code.generators().rows())
            if (inner_product(g, v).value() != 0) {
                ok = false;
                break;
            }
        if (ok) kernel.push_back(std::move(v));
    }
    LinearCode fallback{GeneratorMatrix(std::move(kernel))};
    if (!detail::dual_is_valid(code, fallback)) throw ConsistencyError("dual: kernel search failed verification");
    return fallback;
}

/// Outcome of the two self-orthogonality tests on the given generator rows: the definition
/// (all row pairs, including a row with itself, orthogonal) and the symbol-count criterion
/// (ω1+ω3+ω5+ω7+4ω2+4ω6 ≡ 0 mod 8 per row, distinct pairs orthogonal).
struct SelfOrthogonality {
    bool definitional = true;
    bool criterion = true;
    /// First row (or row pair) that fails either test, in text form.
    std::optional<std::string> witness;

    [[nodiscard]] bool agree() const noexcept { return definitional == criterion; }
};

[[nodiscard]] inline SelfOrthogonality self_orthogonality(const LinearCode& code) {
    SelfOrthogonality out;
    const auto& rows = code.generators().rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto w = composition(rows[i]);
        const std::size_t omega = w[1] + w[3] + w[5] + w[7] + 4 * w[2] + 4 * w[6];
        const bool by_counts = omega % 8 == 0;
        const bool by_square = inner_product(rows[i], rows[i]).value() == 0;
        if (!by_counts) out.criterion = false;
        if (!by_square) out.definitional = false;
        if ((!by_counts || !by_square) && !out.witness) out.witness = rows[i].to_string();
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (inner_product(rows[i], rows[j]).value() != 0) {
                out.definitional = false;
                out.criterion = false;
                if (!out.witness) out.witness = rows[i].to_string() + "," + rows[j].to_string();
            }
        }
    }
    return out;
}

[[nodiscard]] inline bool is_self_orthogonal(const LinearCode& code) { return self_orthogonality(code).definitional; }

[[nodiscard]] inline bool is_self_dual(const LinearCode& code) {
    return 2 * code.log2_cardinality() == 3 * code.length() && is_self_orthogonal(code);
}

/// Minimum weight over nonzero codewords; the zero code reports 0 with `zero_code` set.
struct MinWeight {
    unsigned value = 0;
    bool zero_code = false;
};

[[nodiscard]] inline MinWeight min_weight(const LinearCode& code, Metric m,
                                          std::uint64_t limit = kDefaultEnumerationLimit) {
    if (code.is_zero()) return {0, true};
    const auto& table = detail::kSymbolWeight[static_cast<std::size_t>(m)];
    unsigned best = ~0u;
    for_each_codeword(
        code,
        [&](std::span<const std::uint8_t> w) {
            unsigned s = 0;
            for (auto x : w) s += table[x];
            if (s != 0 && s < best) best = s;
        },
        limit);
    return {best, false};
}

using WeightDistribution = std::map<unsigned, std::uint64_t>;

[[nodiscard]] inline WeightDistribution weight_distribution(const LinearCode& code, Metric m,
                                                            std::uint64_t limit = kDefaultEnumerationLimit) {
    const auto& table = detail::kSymbolWeight[static_cast<std::size_t>(m)];
    WeightDistribution dist;
    for_each_codeword(
        code,
        [&](std::span<const std::uint8_t> w) {
            unsigned s = 0;
            for (auto x : w) s += table[x];
            ++dist[s];
        },
        limit);
    return dist;
}

/// Same words in the same coordinates (generator sets may differ).
[[nodiscard]] inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length() || a.log2_cardinality() != b.log2_cardinality()) return false;
    for (const auto& g : a.generators().rows())
        if (!b.contains(g)) return false;
    return true;
}

}  // namespace octcode
