#pragma once

// Brute-force reference implementations used only by the tests. Nothing here goes through the
// row reduction: codes are spanned by closing the generator set under addition.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "octcode/octcode.hpp"

namespace oracle {

using Word = std::vector<std::uint8_t>;
using WordSet = std::set<Word>;

inline Word add(const Word& a, const Word& b, unsigned m) {
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % m);
    return r;
}

/// All Z_m-combinations of `gens`, by closing {0} under adding a generator.
inline WordSet span_closure(const std::vector<Word>& gens, std::size_t n, unsigned m = 8) {
    WordSet seen{Word(n, 0)};
    std::vector<Word> frontier{Word(n, 0)};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Word r(n);
                for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint8_t>((w[i] + g[i]) % m);
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::vector<Word> rows_of(const octcode::GeneratorMatrix& g) {
    std::vector<Word> out;
    for (const auto& r : g.rows()) out.emplace_back(r.coords().begin(), r.coords().end());
    return out;
}

inline WordSet words(const octcode::LinearCode& c) { return span_closure(rows_of(c.generators()), c.length()); }

template <class F>
void for_each_vector(std::size_t n, unsigned m, F&& f) {
    Word v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++v[i] < m) break;
            v[i] = 0;
        }
        if (i == n) return;
    }
}

inline unsigned weight(const Word& w, octcode::Metric m) {
    unsigned s = 0;
    for (auto x : w) s += octcode::symbol_weight(octcode::Residue(x), m);
    return s;
}

inline unsigned dist(const Word& a, const Word& b, octcode::Metric m) {
    unsigned s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += octcode::symbol_weight(octcode::Residue(8 + a[i] - b[i]), m);
    return s;
}

/// Every vector of Z8^n orthogonal to all words (mod 8).
inline WordSet annihilator(const WordSet& code, std::size_t n) {
    WordSet out;
    for_each_vector(n, 8, [&](const Word& v) {
        for (const auto& c : code) {
            unsigned s = 0;
            for (std::size_t i = 0; i < n; ++i) s += v[i] * c[i];
            if (s % 8 != 0) return;
        }
        out.insert(v);
    });
    return out;
}

/// max over x in Z8^n of min over c in C of d(x, c).
inline unsigned covering_radius(const WordSet& code, std::size_t n, octcode::Metric m) {
    unsigned r = 0;
    for_each_vector(n, 8, [&](const Word& x) {
        unsigned best = ~0u;
        for (const auto& c : code) best = std::min(best, dist(x, c, m));
        r = std::max(r, best);
    });
    return r;
}

inline unsigned min_weight(const WordSet& code, octcode::Metric m) {
    unsigned best = ~0u;
    for (const auto& c : code) {
        const unsigned w = weight(c, m);
        if (w != 0) best = std::min(best, w);
    }
    return best;
}

/// Random generator matrix; each row is scaled by 1, 2 or 4 with the given odds so that codes of
/// every type show up.
inline octcode::GeneratorMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t n) {
    std::uniform_int_distribution<int> sym(0, 7), scale(0, 3);
    std::vector<octcode::OctVector> out;
    for (std::size_t r = 0; r < rows; ++r) {
        const int s = scale(rng);
        const unsigned mult = s <= 1 ? 1 : (s == 2 ? 2 : 4);
        std::vector<std::uint8_t> v(n);
        for (auto& x : v) x = static_cast<std::uint8_t>((mult * sym(rng)) % 8);
        out.emplace_back(std::move(v));
    }
    return octcode::GeneratorMatrix(std::move(out));
}

inline octcode::LinearCode random_code(std::mt19937& rng, std::size_t max_rows, std::size_t min_n, std::size_t max_n) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_rows)(rng);
    return octcode::LinearCode(random_matrix(rng, k, n));
}

}  // namespace oracle
