#include <gtest/gtest.h>

#include <algorithm>

#include "octcode/families.hpp"
#include "oracles.hpp"

using namespace octcode;

namespace {

const ClaimRecord* find_claim(const std::vector<ClaimRecord>& cs, const std::string& id) {
    for (const auto& c : cs)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

TEST(Families, ParseFormatRoundTrip) {
    for (const char* text : {"repetition:a=1,n=8", "brep:m=1,0,0,2,0,0,1", "simplex-alpha:k=2", "simplex-beta:k=3",
                             "macdonald-alpha:k=2,u=1", "macdonald-beta:k=3,u=1", "reed-muller:m=4", "octacode"})
        EXPECT_EQ(format_family(parse_family(text)), text);
    EXPECT_EQ(format_family(parse_family("repetition:n=4,a=3")), "repetition:a=3,n=4");
}

TEST(Families, ParseErrors) {
    EXPECT_THROW((void)parse_family("hamming:k=3"), ParseError);
    EXPECT_THROW((void)parse_family("repetition:a=1"), ParseError);
    EXPECT_THROW((void)parse_family("repetition:a=x,n=2"), ParseError);
    EXPECT_THROW((void)parse_family("brep:m=1,2,3"), ParseError);
    EXPECT_THROW((void)parse_family("simplex-alpha:k=1,z=2"), ParseError);
    EXPECT_THROW((void)parse_family("octacode:k=1"), ParseError);
}

TEST(Families, ParameterConstraints) {
    EXPECT_THROW((void)build(family::Repetition{0, 3}), ParameterError);
    EXPECT_THROW((void)build(family::Repetition{8, 3}), ParameterError);
    EXPECT_THROW((void)build(family::Repetition{1, 0}), ParameterError);
    EXPECT_THROW((void)build(family::BlockRepetition{}), ParameterError);
    EXPECT_THROW((void)build(family::SimplexAlpha{0}), ParameterError);
    EXPECT_THROW((void)build(family::SimplexBeta{1}), ParameterError);
    EXPECT_THROW((void)build(family::MacDonaldAlpha{2, 2}), ParameterError);
    EXPECT_THROW((void)build(family::MacDonaldBeta{3, 0}), ParameterError);
    EXPECT_THROW((void)build(family::ReedMuller1{2}), ParameterError);
}

TEST(Families, RepetitionClasses) {
    for (std::size_t n : {1u, 2u, 3u}) {
        const auto t = repetition_code_table(n);
        EXPECT_TRUE(t.verified) << n;
    }
    const auto w2 = oracle::words(build(family::Repetition{2, 1}));
    EXPECT_EQ(w2, (oracle::WordSet{{0}, {2}, {4}, {6}}));
    const auto w4 = oracle::words(build(family::Repetition{4, 1}));
    EXPECT_EQ(w4, (oracle::WordSet{{0}, {4}}));
    EXPECT_EQ(oracle::words(build(family::Repetition{3, 2})), oracle::words(build(family::Repetition{1, 2})));
}

TEST(Families, SimplexAlphaParameters) {
    const auto s1 = build(family::SimplexAlpha{1});
    EXPECT_EQ(s1.generators().rows().front().to_string(), "01234567");
    const std::pair<unsigned, unsigned> expect[] = {{8, 16}, {64, 128}};
    for (unsigned k = 1; k <= 2; ++k) {
        const auto c = build(family::SimplexAlpha{k});
        const auto words = oracle::words(c);
        EXPECT_EQ(c.length(), expect[k - 1].first);
        EXPECT_EQ(words.size(), expect[k - 1].first);
        EXPECT_EQ(oracle::min_weight(words, Metric::homogeneous), expect[k - 1].second);
        bool orthogonal = true;
        for (const auto& a : words)
            for (const auto& b : words) {
                unsigned s = 0;
                for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
                orthogonal = orthogonal && s % 8 == 0;
            }
        EXPECT_EQ(is_self_orthogonal(c), orthogonal);
        // [01234567] has inner product 140 = 4 (mod 8) with itself, so k = 1 is not self-orthogonal
        EXPECT_EQ(orthogonal, k == 2);
    }
    EXPECT_EQ(build(family::SimplexAlpha{3}).length(), 512u);
}

TEST(Families, SimplexBetaParameters) {
    const auto c = build(family::SimplexBeta{2});
    const auto& rows = c.generators().rows();
    EXPECT_EQ(rows[0].to_string(), "111111110246");
    EXPECT_EQ(rows[1].to_string(), "012345671111");
    const auto words = oracle::words(c);
    EXPECT_EQ(words.size(), 64u);
    EXPECT_EQ(oracle::min_weight(words, Metric::homogeneous), 24u);
    EXPECT_TRUE(is_self_orthogonal(c));
    EXPECT_EQ(build(family::SimplexBeta{3}).length(), 112u);
}

TEST(Families, MacDonald) {
    const auto a = build(family::MacDonaldAlpha{2, 1});
    const auto b = build(family::MacDonaldBeta{2, 1});
    EXPECT_EQ(a.length(), 56u);
    EXPECT_EQ(b.length(), 11u);
    EXPECT_EQ(oracle::words(a).size(), 64u);
    EXPECT_EQ(oracle::words(b).size(), 64u);
    // deleted columns are exactly [0 over G_u]
    const auto g = build(family::SimplexBeta{2}).generators().rows();
    EXPECT_EQ(macdonald_beta_offset(2, 1), 8u);
    EXPECT_EQ(g[0].coords()[8], 0);
    EXPECT_EQ(g[1].coords()[8], 1);
    EXPECT_EQ(build(family::MacDonaldBeta{3, 1}).length(), 111u);
    EXPECT_EQ(build(family::MacDonaldBeta{3, 2}).length(), 100u);
    EXPECT_EQ(build(family::MacDonaldAlpha{3, 2}).length(), 448u);
    // the block removed for (3,2) has zero top row and G_2^beta below
    const auto g3 = build(family::SimplexBeta{3}).generators().rows();
    const auto g2 = build(family::SimplexBeta{2}).generators().rows();
    const std::size_t off = macdonald_beta_offset(3, 2);
    EXPECT_EQ(off, 64u);
    for (std::size_t j = 0; j < 12; ++j) {
        EXPECT_EQ(g3[0].coords()[off + j], 0);
        EXPECT_EQ(g3[1].coords()[off + j], g2[0].coords()[j]);
        EXPECT_EQ(g3[2].coords()[off + j], g2[1].coords()[j]);
    }
}

TEST(Families, ReedMuller) {
    const auto c4 = build(family::ReedMuller1{4});
    const auto& rows = c4.generators().rows();
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].to_string(), "0044");
    EXPECT_EQ(rows[1].to_string(), "0404");
    EXPECT_EQ(rows[2].to_string(), "1111");
    for (unsigned m = 3; m <= 5; ++m) {
        const auto c = build(family::ReedMuller1{m});
        const std::size_t n = std::size_t{1} << (m - 2);
        const auto words = oracle::words(c);
        EXPECT_EQ(words.size(), std::size_t{1} << (m + 1));
        // every word is a(1...1) + sum 4 b_i v_i
        oracle::WordSet expected;
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned mask = 0; mask < (1u << (m - 2)); ++mask) {
                oracle::Word w(n);
                for (std::size_t j = 0; j < n; ++j) {
                    unsigned s = a;
                    for (unsigned i = 1; i + 2 <= m; ++i)
                        if ((mask >> (i - 1)) & 1u) s += 4 * ((j >> ((m - 2) - i)) & 1u);
                    w[j] = static_cast<std::uint8_t>(s % 8);
                }
                expected.insert(w);
            }
        EXPECT_EQ(words, expected) << m;
        EXPECT_EQ(oracle::min_weight(words, Metric::homogeneous), 1u << (m - 1));
    }
}

TEST(Families, Octacode) {
    const auto c = build(family::Octacode{});
    EXPECT_EQ(c.generators().rows().front().to_string(), "57561000");
    EXPECT_EQ(c.cardinality(), 4096u);
    EXPECT_TRUE(is_self_orthogonal(c));
    EXPECT_TRUE(is_self_dual(c));
}

TEST(Families, BlockRepetitionDistanceFormulas) {
    // all m_i in {0,1,2} with 1 <= sum <= 4; the formulas range over c, 2c, 4c and so only describe
    // the nonzero words when 4c != 0, i.e. some odd symbol occurs
    std::array<std::size_t, 7> m{};
    unsigned checked = 0, degenerate = 0;
    for (unsigned code = 0; code < 2187; ++code) {
        unsigned x = code, sum = 0;
        for (auto& v : m) {
            v = x % 3;
            x /= 3;
            sum += static_cast<unsigned>(v);
        }
        if (sum == 0 || sum > 4) continue;
        const FamilySpec spec = family::BlockRepetition{m};
        const auto words = oracle::words(build(spec));
        const auto claims = claims_for(spec);
        const auto* dhw = find_claim(claims, "brep/d_HW");
        const auto* de = find_claim(claims, "brep/d_E");
        ASSERT_TRUE(dhw && de);
        if (m[0] + m[2] + m[4] + m[6] == 0) {
            ++degenerate;
            continue;
        }
        EXPECT_EQ(Rational(oracle::min_weight(words, Metric::homogeneous)), dhw->claimed) << format_family(spec);
        EXPECT_EQ(Rational(oracle::min_weight(words, Metric::euclidean)), de->claimed) << format_family(spec);
        EXPECT_EQ(words.size(), 8u);
        ++checked;
    }
    EXPECT_GT(checked, 100u);
    EXPECT_GT(degenerate, 0u);
}

TEST(Families, ClaimsCarryExactRationals) {
    const auto rep = claims_for(family::Repetition{1, 8});
    const auto* re = find_claim(rep, "repetition/r_E");
    ASSERT_TRUE(re);
    EXPECT_EQ(re->claimed, Rational(44));
    EXPECT_EQ(re->relation, Relation::eq);
    EXPECT_EQ(find_claim(claims_for(family::Repetition{3, 3}), "repetition/r_E")->claimed, Rational(33, 2));
    EXPECT_EQ(find_claim(claims_for(family::Repetition{4, 1}), "repetition/r_E")->claimed, Rational(8));

    const auto sa = claims_for(family::SimplexAlpha{1});
    EXPECT_EQ(find_claim(sa, "simplex-alpha/d_HW")->claimed, Rational(16));
    EXPECT_EQ(find_claim(sa, "simplex-alpha/self-orthogonal")->claimed, Rational(1));
    EXPECT_EQ(find_claim(sa, "simplex-alpha/r_HW")->claimed, Rational(16));
    EXPECT_EQ(find_claim(sa, "simplex-alpha/r_HW")->relation, Relation::ge);

    const auto sb = claims_for(family::SimplexBeta{3});
    const auto* cond = find_claim(sb, "simplex-beta/r_E");
    ASSERT_TRUE(cond && cond->reference);
    EXPECT_EQ(*cond->reference, "simplex-beta:k=2#covering_radius/euclidean");
    EXPECT_EQ(cond->claimed, Rational(3 * 511, 2) - Rational(5 * 63, 3) - Rational(39, 2));

    const auto md = claims_for(family::MacDonaldAlpha{3, 1});
    EXPECT_TRUE(find_claim(md, "macdonald-alpha/r_E r=2"));
    EXPECT_TRUE(find_claim(md, "macdonald-alpha/r_E r=3"));

    const auto oc = claims_for(family::Octacode{});
    EXPECT_EQ(find_claim(oc, "octacode/r_HW")->claimed, Rational(6));

    EXPECT_TRUE(find_claim(claims_for(family::ReedMuller1{4}), "reed-muller/r_HW"));
    EXPECT_FALSE(find_claim(claims_for(family::ReedMuller1{5}), "reed-muller/r_HW"));
}

TEST(Families, ParameterClaimsMatchConstruction) {
    const std::vector<FamilySpec> specs = {family::SimplexAlpha{1}, family::SimplexAlpha{2}, family::SimplexBeta{2},
                                           family::MacDonaldAlpha{2, 1}, family::MacDonaldBeta{2, 1},
                                           family::ReedMuller1{3}, family::ReedMuller1{6}, family::Octacode{}};
    for (const auto& spec : specs) {
        const auto c = build(spec);
        for (const auto& cl : claims_for(spec)) {
            if (cl.quantity == Quantity::length) {
                EXPECT_EQ(Rational(static_cast<long long>(c.length())), cl.claimed) << cl.id;
            }
            if (cl.quantity == Quantity::cardinality) {
                EXPECT_EQ(Rational(static_cast<long long>(c.cardinality())), cl.claimed) << cl.id;
            }
        }
    }
}
