#pragma once

// Constructors for the standard Z8 code families and the published statements about each,
// instantiated at concrete parameters.

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "octcode/code.hpp"
#include "octcode/ledger.hpp"

namespace octcode {

namespace family {

struct Repetition {
    unsigned a = 1;
    std::size_t n = 1;
};
struct BlockRepetition {
    std::array<std::size_t, 7> m{};
};
struct SimplexAlpha {
    unsigned k = 1;
};
struct SimplexBeta {
    unsigned k = 2;
};
struct MacDonaldAlpha {
    unsigned k = 2, u = 1;
};
struct MacDonaldBeta {
    unsigned k = 2, u = 1;
};
struct ReedMuller1 {
    unsigned m = 3;
};
struct Octacode {};

}  // namespace family

using FamilySpec = std::variant<family::Repetition, family::BlockRepetition, family::SimplexAlpha, family::SimplexBeta,
                                family::MacDonaldAlpha, family::MacDonaldBeta, family::ReedMuller1, family::Octacode>;

/// Longest code the constructors will materialize.
inline constexpr std::size_t kMaxFamilyLength = 8192;

namespace detail {

using Matrix = std::vector<Row>;

[[nodiscard]] inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

[[nodiscard]] inline std::size_t simplex_alpha_length(unsigned k) { return ipow(8, k); }
[[nodiscard]] inline std::size_t simplex_beta_length(unsigned k) { return ipow(4, k - 1) * ((std::uint64_t{1} << k) - 1); }

[[nodiscard]] inline Matrix simplex_alpha_matrix(unsigned k) {
    if (k == 1) return {{0, 1, 2, 3, 4, 5, 6, 7}};
    const Matrix prev = simplex_alpha_matrix(k - 1);
    const std::size_t w = prev.front().size();
    Matrix g(k, Row(8 * w));
    for (unsigned s = 0; s < 8; ++s)
        for (std::size_t j = 0; j < w; ++j) {
            g[0][s * w + j] = static_cast<std::uint8_t>(s);
            for (unsigned r = 0; r + 1 < k; ++r) g[r + 1][s * w + j] = prev[r][j];
        }
    return g;
}

// G_1 = [1]; for k >= 2 the top row is 1 over G_{k-1}^alpha, then 0, 2, 4, 6 over copies of G_{k-1}^beta.
[[nodiscard]] inline Matrix simplex_beta_matrix(unsigned k) {
    if (k == 1) return {{1}};
    const Matrix a = simplex_alpha_matrix(k - 1);
    const Matrix b = simplex_beta_matrix(k - 1);
    const std::size_t wa = a.front().size(), wb = b.front().size();
    Matrix g(k, Row(wa + 4 * wb));
    for (std::size_t j = 0; j < wa; ++j) {
        g[0][j] = 1;
        for (unsigned r = 0; r + 1 < k; ++r) g[r + 1][j] = a[r][j];
    }
    for (unsigned c = 0; c < 4; ++c)
        for (std::size_t j = 0; j < wb; ++j) {
            const std::size_t col = wa + c * wb + j;
            g[0][col] = static_cast<std::uint8_t>(2 * c);
            for (unsigned r = 0; r + 1 < k; ++r) g[r + 1][col] = b[r][j];
        }
    return g;
}

// Removes columns [first, first + count).
[[nodiscard]] inline Matrix delete_columns(const Matrix& g, std::size_t first, std::size_t count) {
    Matrix out;
    for (const auto& row : g) {
        Row r(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(first));
        r.insert(r.end(), row.begin() + static_cast<std::ptrdiff_t>(first + count), row.end());
        out.push_back(std::move(r));
    }
    return out;
}

[[nodiscard]] inline LinearCode from_matrix(const Matrix& g) {
    std::vector<OctVector> rows;
    rows.reserve(g.size());
    for (const auto& r : g) rows.emplace_back(r);
    return LinearCode(GeneratorMatrix(std::move(rows)));
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

}  // namespace detail

/// Offset of the column block of G_k^beta whose top k-u rows are zero and whose bottom u rows are
/// G_u^beta: at each recursion level it sits after the all-ones block, i.e. at 8^{k-1} + ... + 8^u.
[[nodiscard]] inline std::size_t macdonald_beta_offset(unsigned k, unsigned u) {
    std::size_t off = 0;
    for (unsigned j = u; j < k; ++j) off += detail::ipow(8, j);
    return off;
}

/// Throws ParameterError when the spec violates its family's constraints or exceeds kMaxFamilyLength.
inline void validate(const FamilySpec& spec) {
    using detail::require;
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Repetition>) {
                require(s.a >= 1 && s.a <= 7, "repetition: a must be in 1..7");
                require(s.n >= 1 && s.n <= kMaxFamilyLength, "repetition: n must be in 1.." + std::to_string(kMaxFamilyLength));
            } else if constexpr (std::is_same_v<T, family::BlockRepetition>) {
                const std::size_t n = std::accumulate(s.m.begin(), s.m.end(), std::size_t{0});
                require(n >= 1, "brep: block sizes must sum to at least 1");
                require(n <= kMaxFamilyLength, "brep: length exceeds " + std::to_string(kMaxFamilyLength));
            } else if constexpr (std::is_same_v<T, family::SimplexAlpha>) {
                require(s.k >= 1 && s.k <= 4, "simplex-alpha: k must be in 1..4");
            } else if constexpr (std::is_same_v<T, family::SimplexBeta>) {
                require(s.k >= 2 && s.k <= 5, "simplex-beta: k must be in 2..5");
            } else if constexpr (std::is_same_v<T, family::MacDonaldAlpha>) {
                require(s.k >= 2 && s.k <= 4, "macdonald-alpha: k must be in 2..4");
                require(s.u >= 1 && s.u + 1 <= s.k, "macdonald-alpha: u must satisfy 1 <= u <= k-1");
            } else if constexpr (std::is_same_v<T, family::MacDonaldBeta>) {
                require(s.k >= 2 && s.k <= 5, "macdonald-beta: k must be in 2..5");
                require(s.u >= 1 && s.u + 1 <= s.k, "macdonald-beta: u must satisfy 1 <= u <= k-1");
            } else if constexpr (std::is_same_v<T, family::ReedMuller1>) {
                require(s.m >= 3 && s.m <= 15, "reed-muller: m must be in 3..15");
            }
        },
        spec);
}

[[nodiscard]] inline LinearCode build(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> LinearCode {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Repetition>) {
                return detail::from_matrix({detail::Row(s.n, static_cast<std::uint8_t>(s.a))});
            } else if constexpr (std::is_same_v<T, family::BlockRepetition>) {
                detail::Row r;
                for (unsigned i = 0; i < 7; ++i) r.insert(r.end(), s.m[i], static_cast<std::uint8_t>(i + 1));
                return detail::from_matrix({r});
            } else if constexpr (std::is_same_v<T, family::SimplexAlpha>) {
                return detail::from_matrix(detail::simplex_alpha_matrix(s.k));
            } else if constexpr (std::is_same_v<T, family::SimplexBeta>) {
                return detail::from_matrix(detail::simplex_beta_matrix(s.k));
            } else if constexpr (std::is_same_v<T, family::MacDonaldAlpha>) {
                // the zero-over-G_u block of the recursion is the leading 8^u columns
                return detail::from_matrix(
                    detail::delete_columns(detail::simplex_alpha_matrix(s.k), 0, detail::simplex_alpha_length(s.u)));
            } else if constexpr (std::is_same_v<T, family::MacDonaldBeta>) {
                return detail::from_matrix(detail::delete_columns(detail::simplex_beta_matrix(s.k),
                                                                  macdonald_beta_offset(s.k, s.u),
                                                                  detail::simplex_beta_length(s.u)));
            } else if constexpr (std::is_same_v<T, family::ReedMuller1>) {
                const std::size_t n = std::size_t{1} << (s.m - 2);
                detail::Matrix g;
                for (unsigned i = 1; i + 2 <= s.m; ++i) {
                    detail::Row r(n);
                    for (std::size_t j = 0; j < n; ++j) r[j] = static_cast<std::uint8_t>(4 * ((j >> ((s.m - 2) - i)) & 1u));
                    g.push_back(std::move(r));
                }
                g.emplace_back(n, 1);
                return detail::from_matrix(g);
            } else {
                return detail::from_matrix({{5, 7, 5, 6, 1, 0, 0, 0},
                                            {5, 0, 7, 5, 6, 1, 0, 0},
                                            {5, 0, 0, 7, 5, 6, 1, 0},
                                            {5, 0, 0, 0, 7, 5, 6, 1}});
            }
        },
        spec);
}

/// Canonical text form, e.g. "repetition:a=1,n=8", "brep:m=1,0,0,2,0,0,1", "octacode".
[[nodiscard]] inline std::string format_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Repetition>) {
                return "repetition:a=" + std::to_string(s.a) + ",n=" + std::to_string(s.n);
            } else if constexpr (std::is_same_v<T, family::BlockRepetition>) {
                std::string t = "brep:m=";
                for (unsigned i = 0; i < 7; ++i) t += (i ? "," : "") + std::to_string(s.m[i]);
                return t;
            } else if constexpr (std::is_same_v<T, family::SimplexAlpha>) {
                return "simplex-alpha:k=" + std::to_string(s.k);
            } else if constexpr (std::is_same_v<T, family::SimplexBeta>) {
                return "simplex-beta:k=" + std::to_string(s.k);
            } else if constexpr (std::is_same_v<T, family::MacDonaldAlpha>) {
                return "macdonald-alpha:k=" + std::to_string(s.k) + ",u=" + std::to_string(s.u);
            } else if constexpr (std::is_same_v<T, family::MacDonaldBeta>) {
                return "macdonald-beta:k=" + std::to_string(s.k) + ",u=" + std::to_string(s.u);
            } else if constexpr (std::is_same_v<T, family::ReedMuller1>) {
                return "reed-muller:m=" + std::to_string(s.m);
            } else {
                return "octacode";
            }
        },
        spec);
}

namespace detail {

[[nodiscard]] inline std::size_t parse_count(std::string_view v, std::string_view text) {
    if (v.empty() || v.size() > 9) throw ParseError("family spec '" + std::string(text) + "': bad number '" + std::string(v) + "'");
    std::size_t x = 0;
    for (char c : v) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("family spec '" + std::string(text) + "': bad number '" + std::string(v) + "'");
        x = 10 * x + static_cast<std::size_t>(c - '0');
    }
    return x;
}

}  // namespace detail

/// Parses the text form produced by format_family. Parameters may appear in any order; all are required.
[[nodiscard]] inline FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string name(text.substr(0, colon));
    std::vector<std::pair<std::string, std::string>> kv;
    if (colon != std::string_view::npos) {
        std::string rest(text.substr(colon + 1));
        // split on ',' but keep the comma-separated list after "m="
        std::size_t pos = 0;
        while (pos < rest.size()) {
            const auto eq = rest.find('=', pos);
            if (eq == std::string::npos) throw ParseError("family spec '" + std::string(text) + "': expected key=value");
            std::string key = rest.substr(pos, eq - pos);
            std::size_t end = eq + 1;
            while (end < rest.size()) {
                const auto comma = rest.find(',', end);
                if (comma == std::string::npos) {
                    end = rest.size();
                    break;
                }
                const auto next_eq = rest.find('=', comma);
                const auto next_comma = rest.find(',', comma + 1);
                if (next_eq != std::string::npos && (next_comma == std::string::npos || next_eq < next_comma)) {
                    end = comma;
                    break;
                }
                end = comma + 1;
            }
            kv.emplace_back(std::move(key), rest.substr(eq + 1, end - eq - 1));
            pos = end < rest.size() ? end + 1 : end;
        }
    }
    auto get = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw ParseError("family spec '" + std::string(text) + "': missing parameter '" + key + "'");
    };
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : kv) {
            bool known = false;
            for (const char* want : keys) known = known || k == want;
            if (!known) throw ParseError("family spec '" + std::string(text) + "': unknown parameter '" + k + "'");
        }
    };
    auto num = [&](const std::string& key) { return detail::parse_count(get(key), text); };
    auto small = [&](const std::string& key) { return static_cast<unsigned>(std::min<std::size_t>(num(key), 1000)); };

    FamilySpec spec;
    if (name == "repetition") {
        expect_keys({"a", "n"});
        spec = family::Repetition{small("a"), num("n")};
    } else if (name == "brep") {
        expect_keys({"m"});
        family::BlockRepetition b;
        const std::string list = get("m");
        std::size_t i = 0, pos = 0;
        while (true) {
            const auto comma = list.find(',', pos);
            if (i == 7) throw ParseError("family spec '" + std::string(text) + "': brep needs exactly 7 block sizes");
            b.m[i++] = detail::parse_count(std::string_view(list).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos), text);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (i != 7) throw ParseError("family spec '" + std::string(text) + "': brep needs exactly 7 block sizes");
        spec = b;
    } else if (name == "simplex-alpha") {
        expect_keys({"k"});
        spec = family::SimplexAlpha{small("k")};
    } else if (name == "simplex-beta") {
        expect_keys({"k"});
        spec = family::SimplexBeta{small("k")};
    } else if (name == "macdonald-alpha") {
        expect_keys({"k", "u"});
        spec = family::MacDonaldAlpha{small("k"), small("u")};
    } else if (name == "macdonald-beta") {
        expect_keys({"k", "u"});
        spec = family::MacDonaldBeta{small("k"), small("u")};
    } else if (name == "reed-muller") {
        expect_keys({"m"});
        spec = family::ReedMuller1{small("m")};
    } else if (name == "octacode") {
        if (!kv.empty()) throw ParseError("family spec '" + std::string(text) + "': octacode takes no parameters");
        spec = family::Octacode{};
    } else {
        throw ParseError("unknown code family '" + name + "'");
    }
    return spec;
}

namespace detail {

struct ClaimBuilder {
    std::string family;
    std::string parameters;
    std::vector<ClaimRecord> out;

    ClaimRecord& add(std::string id, std::string statement, Quantity q, std::optional<Metric> m, Relation r, Rational v) {
        ClaimRecord c;
        c.id = family + "/" + std::move(id);
        c.parameters = parameters;
        c.statement = std::move(statement);
        c.quantity = q;
        c.metric = m;
        c.relation = r;
        c.claimed = v;
        out.push_back(std::move(c));
        return out.back();
    }
};

[[nodiscard]] inline std::string parameters_of(const std::string& formatted) {
    const auto colon = formatted.find(':');
    return colon == std::string::npos ? std::string() : formatted.substr(colon + 1);
}

[[nodiscard]] inline long long pow_ll(long long b, unsigned e) { return static_cast<long long>(ipow(static_cast<std::uint64_t>(b), e)); }

}  // namespace detail

/// Key for a conditional claim's referenced value: "<family spec>#<quantity>/<metric>".
[[nodiscard]] inline std::string reference_key(const FamilySpec& spec, Quantity q, Metric m) {
    return format_family(spec) + "#" + std::string(quantity_name(q)) + "/" + std::string(metric_name(m));
}

/// Every published statement about the family, instantiated at the spec's parameters.
[[nodiscard]] inline std::vector<ClaimRecord> claims_for(const FamilySpec& spec) {
    validate(spec);
    const std::string formatted = format_family(spec);
    detail::ClaimBuilder b{formatted.substr(0, formatted.find(':')), detail::parameters_of(formatted), {}};
    using detail::pow_ll;
    constexpr auto E = Metric::euclidean;
    constexpr auto HW = Metric::homogeneous;

    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Repetition>) {
                const long long n = static_cast<long long>(s.n);
                const bool odd = s.a % 2 == 1;
                const bool two = s.a == 2 || s.a == 6;
                b.add("cardinality", odd ? "|C| = 8" : (two ? "|C| = 4" : "|C| = 2"), Quantity::cardinality, {},
                      Relation::eq, Rational(odd ? 8 : (two ? 4 : 2)));
                if (odd)
                    b.add("r_E", "r_E = 11n/2", Quantity::covering_radius, E, Relation::eq, Rational(11 * n, 2));
                else if (two)
                    b.add("r_E", "r_E = 6n", Quantity::covering_radius, E, Relation::eq, Rational(6 * n));
                else
                    b.add("r_E", "r_E = 8n", Quantity::covering_radius, E, Relation::eq, Rational(8 * n));
                b.add("r_HW", "r_HW = 2n", Quantity::covering_radius, HW, Relation::eq, Rational(2 * n));
            } else if constexpr (std::is_same_v<T, family::BlockRepetition>) {
                std::array<long long, 8> m{};
                for (unsigned i = 0; i < 7; ++i) m[i + 1] = static_cast<long long>(s.m[i]);
                const long long odd = m[1] + m[3] + m[5] + m[7];
                b.add("length", "n = m1+...+m7", Quantity::length, {}, Relation::eq,
                      Rational(odd + m[2] + m[4] + m[6]));
                b.add("cardinality", "M = 8", Quantity::cardinality, {}, Relation::eq, Rational(8));
                const long long dhw = std::min({2 * m[1] + 2 * m[2] + 2 * m[3] + 4 * m[4] + 2 * m[5] + 2 * m[6] + 2 * m[7],
                                                2 * m[1] + 4 * m[2] + 2 * m[3] + 2 * m[5] + 4 * m[6] + 2 * m[7],
                                                4 * m[1] + 4 * m[3] + 4 * m[5] + 4 * m[7]});
                b.add("d_HW", "d_HW = min{2m1+2m2+2m3+4m4+2m5+2m6+2m7, 2m1+4m2+2m3+2m5+4m6+2m7, 4(m1+m3+m5+m7)}",
                      Quantity::min_weight, HW, Relation::eq, Rational(dhw));
                const long long de = std::min({m[1] + 4 * m[2] + 9 * m[3] + 16 * m[4] + 9 * m[5] + 4 * m[6] + m[7],
                                               4 * m[1] + 16 * m[2] + 4 * m[3] + 4 * m[5] + 16 * m[6] + 4 * m[7],
                                               9 * m[1] + 4 * m[2] + m[3] + 16 * m[4] + m[5] + 4 * m[6] + 9 * m[7],
                                               16 * m[1] + 16 * m[3] + 16 * m[5] + 16 * m[7]});
                b.add("d_E",
                      "d_E = min{m1+4m2+9m3+16m4+9m5+4m6+m7, 4m1+16m2+4m3+4m5+16m6+4m7, 9m1+4m2+m3+16m4+m5+4m6+9m7, "
                      "16(m1+m3+m5+m7)}",
                      Quantity::min_weight, E, Relation::eq, Rational(de));
                b.add("r_E", "r_E = 11/2 (m1+m3+m5+m7) + 6(m2+m6) + 8m4", Quantity::covering_radius, E, Relation::eq,
                      Rational(11 * odd, 2) + Rational(6 * (m[2] + m[6]) + 8 * m[4]));
                const long long hw_lo = std::min({2 * (m[1] + m[2] + m[3] + m[4] + m[5] + m[6] + m[7]),
                                                  2 * m[2] + 2 * m[3] + 2 * m[4] + 4 * m[5] + 2 * m[6] + 2 * m[7],
                                                  2 * m[1] + 2 * m[2] + 2 * m[4] + 2 * m[5] + 2 * m[6] + 4 * m[7],
                                                  4 * m[1] + 2 * m[2] + 2 * m[3] + 2 * m[4] + 2 * m[6] + 2 * m[7],
                                                  2 * m[1] + 2 * m[2] + 4 * m[3] + 2 * m[4] + 2 * m[5] + 2 * m[6]});
                b.add("r_HW lower", "r_HW >= min{2(m1+...+m7), 2m2+2m3+2m4+4m5+2m6+2m7, 2m1+2m2+2m4+2m5+2m6+4m7, "
                                    "4m1+2m2+2m3+2m4+2m6+2m7, 2m1+2m2+4m3+2m4+2m5+2m6}",
                      Quantity::covering_radius, HW, Relation::ge, Rational(hw_lo));
                b.add("r_HW upper", "r_HW <= 11(m1+m3+m5+m7) + 12(m2+m6) + 16m4", Quantity::covering_radius, HW,
                      Relation::le, Rational(11 * odd + 12 * (m[2] + m[6]) + 16 * m[4]));
            } else if constexpr (std::is_same_v<T, family::SimplexAlpha>) {
                const long long p = pow_ll(8, s.k);
                b.add("length", "n = 8^k", Quantity::length, {}, Relation::eq, Rational(p));
                b.add("cardinality", "M = 8^k", Quantity::cardinality, {}, Relation::eq, Rational(p));
                b.add("d_HW", "d_HW = 2^(3(k+1)-2)", Quantity::min_weight, HW, Relation::eq,
                      Rational(pow_ll(2, 3 * (s.k + 1) - 2)));
                b.add("self-orthogonal", "C is self-orthogonal", Quantity::self_orthogonal, {}, Relation::eq, Rational(1));
                b.add("r_HW", "r_HW >= 2^(3k+1)", Quantity::covering_radius, HW, Relation::ge,
                      Rational(pow_ll(2, 3 * s.k + 1)));
                b.add("r_E", "r_E <= 6(8^k-1)+2", Quantity::covering_radius, E, Relation::le, Rational(6 * (p - 1) + 2));
                b.add("dual r_E", "r_E(C^perp) <= 3", Quantity::dual_covering_radius, E, Relation::le, Rational(3));
                b.add("dual r_HW", "r_HW(C^perp) = 1", Quantity::dual_covering_radius, HW, Relation::eq, Rational(1));
            } else if constexpr (std::is_same_v<T, family::SimplexBeta>) {
                const long long p8 = pow_ll(8, s.k), p4 = pow_ll(4, s.k), p2 = pow_ll(2, s.k);
                b.add("length", "n = 2^(2(k-1))(2^k-1)", Quantity::length, {}, Relation::eq,
                      Rational(pow_ll(2, 2 * (s.k - 1)) * (p2 - 1)));
                b.add("cardinality", "M = 8^k", Quantity::cardinality, {}, Relation::eq, Rational(p8));
                b.add("d_HW", "d_HW = 2^(2k-1)(2^k-1)", Quantity::min_weight, HW, Relation::eq,
                      Rational(pow_ll(2, 2 * s.k - 1) * (p2 - 1)));
                b.add("self-orthogonal", "C is self-orthogonal", Quantity::self_orthogonal, {}, Relation::eq, Rational(1));
                const FamilySpec base = family::SimplexBeta{2};
                auto& ce = b.add("r_E", "r_E <= 3/2 (8^k-1) - 5/3 (4^k-1) - 39/2 + r_E(S_2^beta)", Quantity::covering_radius,
                                 E, Relation::le, Rational(3 * (p8 - 1), 2) - Rational(5 * (p4 - 1), 3) - Rational(39, 2));
                ce.reference = reference_key(base, Quantity::covering_radius, E);
                auto& ch = b.add("r_HW", "r_HW <= 3(8^k-1) - 10/3 (4^k-1) - 139 + r_HW(S_2^beta)",
                                 Quantity::covering_radius, HW, Relation::le,
                                 Rational(3 * (p8 - 1)) - Rational(10 * (p4 - 1), 3) - Rational(139));
                ch.reference = reference_key(base, Quantity::covering_radius, HW);
                b.add("dual r_HW", "r_HW(C^perp) = 2", Quantity::dual_covering_radius, HW, Relation::eq, Rational(2));
            } else if constexpr (std::is_same_v<T, family::MacDonaldAlpha>) {
                b.add("length", "n = 8^k - 8^u", Quantity::length, {}, Relation::eq,
                      Rational(pow_ll(8, s.k) - pow_ll(8, s.u)));
                b.add("cardinality", "M = 8^k", Quantity::cardinality, {}, Relation::eq, Rational(pow_ll(8, s.k)));
                for (unsigned r = s.u + 1; r <= s.k; ++r) {
                    auto& c = b.add("r_E r=" + std::to_string(r), "r_E <= 6(8^k-8^r) + r_E(M_{r,u}^alpha), r=" + std::to_string(r),
                                    Quantity::covering_radius, E, Relation::le,
                                    Rational(6 * (pow_ll(8, s.k) - pow_ll(8, r))));
                    c.reference = reference_key(family::MacDonaldAlpha{r, s.u}, Quantity::covering_radius, E);
                }
            } else if constexpr (std::is_same_v<T, family::MacDonaldBeta>) {
                b.add("length", "n = 2^(2(k-1))(2^k-1) - 2^(2(u-1))(2^u-1)", Quantity::length, {}, Relation::eq,
                      Rational(pow_ll(4, s.k - 1) * (pow_ll(2, s.k) - 1) - pow_ll(4, s.u - 1) * (pow_ll(2, s.u) - 1)));
                b.add("cardinality", "M = 8^k", Quantity::cardinality, {}, Relation::eq, Rational(pow_ll(8, s.k)));
            } else if constexpr (std::is_same_v<T, family::ReedMuller1>) {
                b.add("length", "n = 2^(m-2)", Quantity::length, {}, Relation::eq, Rational(pow_ll(2, s.m - 2)));
                b.add("cardinality", "M = 2^(m+1)", Quantity::cardinality, {}, Relation::eq, Rational(pow_ll(2, s.m + 1)));
                b.add("d_HW", "d_HW = 2^(m-1)", Quantity::min_weight, HW, Relation::eq, Rational(pow_ll(2, s.m - 1)));
                if (s.m % 2 == 0)
                    b.add("r_HW", "r_HW = 2^(m-1) - 2^(m/2-1)", Quantity::covering_radius, HW, Relation::eq,
                          Rational(pow_ll(2, s.m - 1) - pow_ll(2, s.m / 2 - 1)));
            } else {
                b.add("length", "n = 8", Quantity::length, {}, Relation::eq, Rational(8));
                b.add("cardinality", "M = 8^4", Quantity::cardinality, {}, Relation::eq, Rational(4096));
                b.add("self-dual", "C is self-dual", Quantity::self_dual, {}, Relation::eq, Rational(1));
                b.add("r_HW", "r_HW >= 6", Quantity::covering_radius, HW, Relation::ge, Rational(6));
            }
        },
        spec);
    return b.out;
}

/// The three distinct repetition codes of a given length: generators {1,3,5,7}, {2,6} and {4}
/// each span one code.
struct RepetitionClasses {
    std::vector<std::vector<unsigned>> classes;
    bool verified = false;
};

[[nodiscard]] inline RepetitionClasses repetition_code_table(std::size_t n) {
    RepetitionClasses out;
    std::vector<LinearCode> codes;
    for (unsigned a = 1; a <= 7; ++a) codes.push_back(build(family::Repetition{a, n}));
    for (unsigned a = 1; a <= 7; ++a) {
        bool placed = false;
        for (auto& cls : out.classes)
            if (same_code(codes[cls.front() - 1], codes[a - 1])) {
                cls.push_back(a);
                placed = true;
                break;
            }
        if (!placed) out.classes.push_back({a});
    }
    const std::vector<std::vector<unsigned>> expected = {{1, 3, 5, 7}, {2, 6}, {4}};
    out.verified = out.classes == expected;
    return out;
}

}  // namespace octcode
