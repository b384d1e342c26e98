#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "racg/complexes.hpp"
#include "racg/gf2.hpp"
#include "racg/pcalg.hpp"
#include "racg/series.hpp"

namespace racg {

struct LieTree;
using LieTreePtr = std::shared_ptr<const LieTree>;

// Immutable GF(2) Lie expression tree.  Leaves are single generators mu_i,
// ordered nested commutators c_mu(I, mu_i) = [mu_{t1},[mu_{t2},...[mu_{ts},mu_i]]]
// with I = {t1 < ... < ts}, or numbered entries of a generating-set index;
// internal nodes are brackets.
struct LieTree {
    enum class Kind { mu, nested, gptw, bracket };

    Kind kind = Kind::mu;
    int core = 0;           // mu, nested: innermost letter
    std::vector<int> outer; // nested: wrap letters, ascending and distinct
    int gptw = -1;          // gptw: index into the complex's GptwIndex
    LieTreePtr left, right; // bracket

    static LieTreePtr mu(int i);
    static LieTreePtr nested(std::vector<int> outer, int core); // validates ascending/distinct
    static LieTreePtr gptw_leaf(int index);
    static LieTreePtr bracket(LieTreePtr l, LieTreePtr r);
};

// Total order used for canonical storage and candidate tie-breaking:
// leaves before brackets, then fieldwise/recursive comparison.
int tree_compare(const LieTreePtr& a, const LieTreePtr& b);

struct TreeLess {
    bool operator()(const LieTreePtr& a, const LieTreePtr& b) const {
        return tree_compare(a, b) < 0;
    }
};

// GF(2) sum of distinct trees.
class LiePoly {
public:
    LiePoly() = default;
    explicit LiePoly(LieTreePtr t) { toggle(std::move(t)); }

    const std::set<LieTreePtr, TreeLess>& trees() const { return trees_; }
    bool is_zero() const { return trees_.empty(); }
    std::size_t size() const { return trees_.size(); }

    void toggle(LieTreePtr t);
    LiePoly& operator+=(const LiePoly& o);
    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    bool operator==(const LiePoly& o) const; // structural

private:
    std::set<LieTreePtr, TreeLess> trees_;
};

// Pairwise bracket of two sums, [sum a_i, sum b_j] = sum [a_i, b_j].
LiePoly lie_bracket(const LiePoly& a, const LiePoly& b);

// Multidegree of a tree over `vars` variables; gptw leaves are resolved in `gens`.
Exponent tree_multidegree(const GptwIndex& gens, int vars, const LieTreePtr& t);

// The nested commutator [mu_{v0},[mu_{v1},...[mu_{v{n-2}}, mu_{v{n-1}}]]] as a
// plain bracket tree (letters in the order given: outer letters, then the core).
LieTreePtr nested_tree(const std::vector<int>& letters);

// c_{mu,V}(I, [x, y]) expanded as sum over splittings I = A disjoint-union B of
// [c_{mu,V}(A, x), c_{mu,V}(B, y)] -- 2^|I| bracket terms before cancellation.
// I holds 0-based positions into V, ascending.
LiePoly expand_c(const std::vector<int>& I, const LiePoly& x, const LiePoly& y,
                 const std::vector<int>& V);

// Rewrites a nested commutator with pairwise distinct letters (outer letters in
// the order given, then the core) as a Lie polynomial whose leaves are ordered
// nested commutators c_mu(I, mu_i) with I ascending and max(I) > i.  The
// rewrite uses only GF(2) Jacobi moves, so evaluations agree with the input.
LiePoly order_nested(const std::vector<int>& letters);

// Shared evaluation and component machinery for one complex: the generating-set
// index, evaluation into the word algebra A (square_zero off), and per-
// multidegree bases of the Lie subalgebra generated by the generating set.
class NkContext {
public:
    explicit NkContext(FlagComplex K);

    const FlagComplex& complex() const { return spec_.K; }
    const AlgebraSpec& aspec() const { return spec_; }
    const GptwIndex& gens() const { return gens_; }
    BasisCache& abasis() { return abasis_; }
    int gptw_id(VertexSet J, int j) const; // -1 when (J, j) is not an entry

    // exact (untruncated) evaluation in the word algebra
    AlgElem eval(const LieTreePtr& t);
    AlgElem eval(const LiePoly& p);

    // Basis of one multidegree component of the generated Lie subalgebra:
    // iterated brackets [gen, [gen, ...]] of generating-set entries, candidates
    // tried in lexicographic tree order, first independent kept.
    struct Component {
        Exponent alpha;
        std::shared_ptr<const BasisCache::Basis> columns; // word basis of A at alpha
        std::vector<LieTreePtr> trees;                    // defining trees of the basis
        std::vector<AlgElem> elems;                       // their evaluations
        gf2::Solver solver;                               // every candidate was added
        std::vector<int> add_to_tree;                     // solver add index -> basis position

        // target coordinates -> sum of basis trees; nullopt outside the span
        std::optional<LiePoly> express(const gf2::BitVec& coords) const;
    };

    std::shared_ptr<const Component> component(const Exponent& alpha);

    // columns allowed per component before giving up (resource_limit)
    std::size_t column_cap() const { return cap_; }
    void set_column_cap(std::size_t cap) { cap_ = cap; }

private:
    AlgebraSpec spec_;
    GptwIndex gens_;
    std::map<std::pair<VertexSet, int>, int> gid_;
    std::vector<AlgElem> gen_elems_;
    BasisCache abasis_;
    std::size_t cap_ = 20000;

    std::mutex mu_;
    std::map<Exponent, std::shared_ptr<const Component>> comps_;
};

// Rewrites a no-repeat nested commutator over mu (outer letters in given order,
// then core) as a GF(2) combination of iterated brackets of generating-set
// entries, by linear solve at its multidegree.  Throws internal_inconsistency
// if the commutator falls outside the generated subalgebra.
LiePoly express_in_gptw(NkContext& ctx, const std::vector<int>& letters);

// Dimensions of the multidegree components for 2 <= |alpha| <= D; zero
// components are omitted.  Components with any alpha_i >= D are skipped (they
// vanish: a single letter never powers up inside the subalgebra).
struct NkDims {
    std::map<Exponent, long long> dims;
    std::map<int, long long> by_total_degree() const;
};

NkDims nk_dims(NkContext& ctx, int D, int threads = 1);

} // namespace racg
