#pragma once

#include <random>
#include <utility>
#include <vector>

#include "racg/complexes.hpp"
#include "racg/pcalg.hpp"

namespace racg::testutil {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random flag complex: every graph determines one through its cliques.
inline FlagComplex random_complex(Rng& rng, int max_vertices, double edge_p = 0.4) {
    int m = uniform(rng, 1, max_vertices);
    std::bernoulli_distribution edge(edge_p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (edge(rng)) edges.emplace_back(i, j);
    return FlagComplex::from_edges(m, edges);
}

inline std::vector<int> random_letters(Rng& rng, int m, int len) {
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int& v : out) v = uniform(rng, 1, m);
    return out;
}

// Random distinct letters, ascending source then shuffled.
inline std::vector<int> random_distinct_letters(Rng& rng, int m, int len) {
    std::vector<int> pool(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(len));
    return pool;
}

inline TraceWord word_of(const std::vector<int>& letters) {
    TraceWord w;
    for (int v : letters) w.push_back(static_cast<char>(v));
    return w;
}

// Random element of the word algebra: a few random canonical words.
inline AlgElem random_elem(Rng& rng, const AlgebraSpec& spec, int words, int max_len,
                           std::optional<int> trunc = std::nullopt) {
    AlgElem out(trunc);
    for (int t = 0; t < words; ++t) {
        auto raw = word_of(random_letters(rng, spec.K.m(), uniform(rng, 0, max_len)));
        if (trunc && static_cast<int>(raw.size()) > *trunc) continue;
        if (auto nf = normal_form(spec, raw)) out.toggle(*nf);
    }
    return out;
}

} // namespace racg::testutil
