#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace racg {

// Subset of the vertex set [m], one bit per vertex: bit (i-1) <=> vertex i (vertices are 1-based).
using VertexSet = std::uint32_t;

VertexSet vertex_bit(int i);
VertexSet full_vertex_set(int m);
std::vector<int> vertices_of(VertexSet s);          // ascending
VertexSet vertex_set_of(const std::vector<int>& v); // no validation
int max_vertex(VertexSet s);                        // 0 for the empty set

// A flag simplicial complex, determined by its graph: faces are exactly the
// cliques of the 1-skeleton.  Stored as adjacency bitmasks over at most
// kMaxVertices vertices.
class FlagComplex {
public:
    static constexpr int kMaxVertices = 16;

    FlagComplex() = default;

    // Vertices are 1-based; loops are rejected, duplicate/reversed edge pairs
    // are canonicalized.  Throws input_error on out-of-range data.
    static FlagComplex from_edges(int m, const std::vector<std::pair<int, int>>& edges);

    int m() const { return m_; }
    bool has_edge(int i, int j) const { return i != j && (adj_[i] >> (j - 1)) & 1u; }
    VertexSet neighbors(int i) const { return adj_[i]; } // as a VertexSet
    std::vector<std::pair<int, int>> edge_list() const;  // canonical i<j, sorted
    std::size_t edge_count() const;

private:
    int m_ = 0;
    std::vector<VertexSet> adj_; // adj_[i] for i in 1..m, adj_[0] unused
};

// Connected components of the full subcomplex on J (equivalently of the induced
// graph), as vertex masks ordered by their smallest vertex.
std::vector<VertexSet> components(const FlagComplex& K, VertexSet J);

// Number of connected components of K_J minus one; 0 for the empty set.
// (The rank of the reduced 0-th homology of K_J.)
int h0_reduced(const FlagComplex& K, VertexSet J);

// Vertices j in J that are the smallest in their connected component of K_J and
// lie in a different component than max(J).  Rejects empty J.
std::vector<int> theta(const FlagComplex& K, VertexSet J);

// Sum of (-1)^|I| over all cliques I of the induced graph on J, the empty clique
// included -- i.e. 1 - euler_characteristic(K_J).  euler_term of the empty set is 1.
long long euler_term(const FlagComplex& K, VertexSet J);

// Rank of the first homology of the full subcomplex K_J with GF(2) coefficients,
// computed from the 2-skeleton (triangles of K_J are its 3-cliques).
int h1_dim_gf2(const FlagComplex& K, VertexSet J);

// Whether the 1-skeleton is a chordal graph, decided by searching for a perfect
// elimination ordering (repeatedly removing a simplicial vertex).
bool is_chordal(const FlagComplex& K);

// One generator per (J, j): the nested commutator wrapping the elements of J\{j}
// in ascending order around generator j.
struct GptwEntry {
    VertexSet J = 0;
    int j = 0;

    std::vector<int> outer() const; // J \ {j}, ascending
    int degree() const;             // |J|
    bool operator==(const GptwEntry&) const = default;
};

// Entries for all J with theta(K, J) nonempty, enumerated by ascending |J|, then
// lexicographically on the sorted vertex list of J, then by ascending j.
using GptwIndex = std::vector<GptwEntry>;
GptwIndex gptw_index(const FlagComplex& K);

// Counts of induced subcomplexes on 2 and 3 vertices, by isomorphism type.
struct SubcomplexTypeCounts {
    long long edge_pair = 0;       // two vertices joined by an edge
    long long non_edge_pair = 0;   // two isolated vertices
    long long three_discrete = 0;  // three vertices, no edges
    long long edge_plus_point = 0; // one edge and an isolated vertex
    long long path3 = 0;           // path on three vertices
    long long triangle = 0;        // complete on three vertices
};
SubcomplexTypeCounts subcomplex_type_counts(const FlagComplex& K);

} // namespace racg
