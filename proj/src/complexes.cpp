#include "racg/complexes.hpp"

#include <algorithm>
#include <bit>

#include "racg/errors.hpp"
#include "racg/gf2.hpp"

namespace racg {

VertexSet vertex_bit(int i) { return VertexSet(1) << (i - 1); }

VertexSet full_vertex_set(int m) { return (VertexSet(1) << m) - 1; }

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    for (VertexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

VertexSet vertex_set_of(const std::vector<int>& v) {
    VertexSet s = 0;
    for (int i : v) s |= vertex_bit(i);
    return s;
}

int max_vertex(VertexSet s) { return s ? 32 - std::countl_zero(s) : 0; }

FlagComplex FlagComplex::from_edges(int m, const std::vector<std::pair<int, int>>& edges) {
    if (m < 0) throw input_error("vertex count must be nonnegative");
    if (m > kMaxVertices)
        throw input_error("vertex count " + std::to_string(m) + " exceeds the cap of " +
                          std::to_string(kMaxVertices));
    FlagComplex K;
    K.m_ = m;
    K.adj_.assign(m + 1, 0);
    for (auto [i, j] : edges) {
        if (i < 1 || i > m || j < 1 || j > m)
            throw input_error("edge {" + std::to_string(i) + "," + std::to_string(j) +
                              "} is out of range for m=" + std::to_string(m));
        if (i == j)
            throw input_error("edge {" + std::to_string(i) + "," + std::to_string(j) +
                              "} is a loop");
        K.adj_[i] |= vertex_bit(j);
        K.adj_[j] |= vertex_bit(i);
    }
    return K;
}

std::vector<std::pair<int, int>> FlagComplex::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m_; ++i)
        for (int j = i + 1; j <= m_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::size_t FlagComplex::edge_count() const {
    std::size_t n = 0;
    for (int i = 1; i <= m_; ++i) n += std::popcount(adj_[i]);
    return n / 2;
}

std::vector<VertexSet> components(const FlagComplex& K, VertexSet J) {
    std::vector<VertexSet> out;
    VertexSet left = J;
    while (left) {
        VertexSet comp = left & -left; // lowest remaining vertex seeds a component
        for (;;) {
            VertexSet grown = comp;
            for (int v : vertices_of(comp)) grown |= K.neighbors(v) & J;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out; // seeded in ascending order of the smallest vertex
}

int h0_reduced(const FlagComplex& K, VertexSet J) {
    if (!J) return 0;
    return static_cast<int>(components(K, J).size()) - 1;
}

std::vector<int> theta(const FlagComplex& K, VertexSet J) {
    if (!J) throw input_error("theta is undefined for the empty vertex set");
    auto comps = components(K, J);
    VertexSet max_bit = vertex_bit(max_vertex(J));
    std::vector<int> out;
    for (const VertexSet& c : comps)
        if (!(c & max_bit)) out.push_back(std::countr_zero(c) + 1); // smallest vertex of c
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Sum of (-1)^|I| over cliques I contained in `allowed`, each clique being
// listed by its smallest member first: signed(S) = 1 - sum_v signed(S ∩ N(v) ∩ {>v}).
long long signed_clique_count(const FlagComplex& K, VertexSet allowed) {
    long long total = 1; // the empty clique
    for (VertexSet t = allowed; t; t &= t - 1) {
        int v = std::countr_zero(t) + 1;
        VertexSet above = allowed & ~((vertex_bit(v) << 1) - 1); // vertices > v
        total -= signed_clique_count(K, K.neighbors(v) & above);
    }
    return total;
}

} // namespace

long long euler_term(const FlagComplex& K, VertexSet J) { return signed_clique_count(K, J); }

int h1_dim_gf2(const FlagComplex& K, VertexSet J) {
    std::vector<int> vs = vertices_of(J);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (K.has_edge(vs[a], vs[b])) edges.emplace_back(vs[a], vs[b]);
    if (edges.empty()) return 0;

    auto edge_index = [&](int i, int j) {
        auto it = std::find(edges.begin(), edges.end(), std::make_pair(i, j));
        return static_cast<std::size_t>(it - edges.begin());
    };

    // boundary of each triangle (3-clique) of K_J, as a GF(2) row over the edges
    std::vector<gf2::BitVec> rows;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            for (std::size_t c = b + 1; c < vs.size(); ++c) {
                int i = vs[a], j = vs[b], k = vs[c];
                if (K.has_edge(i, j) && K.has_edge(j, k) && K.has_edge(i, k)) {
                    gf2::BitVec row(edges.size());
                    row.set(edge_index(i, j));
                    row.set(edge_index(j, k));
                    row.set(edge_index(i, k));
                    rows.push_back(std::move(row));
                }
            }

    // dim ker d1 = E - (V - C); dim H1 = dim ker d1 - rank d2
    long long cycles = static_cast<long long>(edges.size()) - static_cast<long long>(vs.size()) +
                       static_cast<long long>(components(K, J).size());
    return static_cast<int>(cycles - static_cast<long long>(gf2::rank(std::move(rows))));
}

bool is_chordal(const FlagComplex& K) {
    VertexSet live = full_vertex_set(K.m());
    // a graph is chordal iff simplicial vertices can be eliminated one by one
    while (live) {
        bool removed = false;
        for (int v : vertices_of(live)) {
            VertexSet nbhd = K.neighbors(v) & live;
            bool simplicial = true;
            auto nb = vertices_of(nbhd);
            for (std::size_t a = 0; a < nb.size() && simplicial; ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    if (!K.has_edge(nb[a], nb[b])) {
                        simplicial = false;
                        break;
                    }
            if (simplicial) {
                live &= ~vertex_bit(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

std::vector<int> GptwEntry::outer() const { return vertices_of(J & ~vertex_bit(j)); }

int GptwEntry::degree() const { return std::popcount(J); }

GptwIndex gptw_index(const FlagComplex& K) {
    GptwIndex out;
    VertexSet all = full_vertex_set(K.m());
    for (VertexSet J = 1; J <= all; ++J) {
        if (std::popcount(J) < 2) continue;
        for (int j : theta(K, J)) out.push_back(GptwEntry{J, j});
    }
    // ascending |J|, then lexicographic on the sorted vertex list, then ascending j
    std::stable_sort(out.begin(), out.end(), [](const GptwEntry& a, const GptwEntry& b) {
        if (std::popcount(a.J) != std::popcount(b.J)) return std::popcount(a.J) < std::popcount(b.J);
        if (a.J != b.J) return vertices_of(a.J) < vertices_of(b.J);
        return a.j < b.j;
    });
    return out;
}

SubcomplexTypeCounts subcomplex_type_counts(const FlagComplex& K) {
    SubcomplexTypeCounts c;
    int m = K.m();
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            (K.has_edge(i, j) ? c.edge_pair : c.non_edge_pair) += 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                int e = int(K.has_edge(i, j)) + int(K.has_edge(j, k)) + int(K.has_edge(i, k));
                switch (e) {
                    case 0: c.three_discrete += 1; break;
                    case 1: c.edge_plus_point += 1; break;
                    case 2: c.path3 += 1; break;
                    default: c.triangle += 1; break;
                }
            }
    return c;
}

} // namespace racg
