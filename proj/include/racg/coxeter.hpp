#pragma once

#include <map>
#include <vector>

#include "racg/complexes.hpp"
#include "racg/pcalg.hpp"
#include "racg/series.hpp"

namespace racg {

// A word in the group generated by involutions g_1..g_m with g_i g_j = g_j g_i
// for every edge {i,j} of the complex.  Letters are vertex numbers; every
// letter is its own inverse.
using GroupWord = std::vector<int>;

// Geodesic, lexicographically least spelling of the element w represents.
// Appends one letter at a time: a letter cancels against an equal letter
// reachable through commuting letters, otherwise it is inserted before the
// maximal trailing run of larger commuting letters.
GroupWord racg_normal_form(const FlagComplex& K, const GroupWord& w);

inline GroupWord inverse_word(const GroupWord& w) { return {w.rbegin(), w.rend()}; }

// (a, b) = a^-1 b^-1 a b, in normal form.
GroupWord group_commutator(const FlagComplex& K, const GroupWord& a, const GroupWord& b);

// (g_{i1}, (g_{i2}, ... (g_{i_{k-1}}, g_{ik}) ... )), in normal form.
GroupWord nested_word(const FlagComplex& K, const std::vector<int>& letters);

// Image of w under g_i -> 1 + u_i in the square-zero word algebra, truncated
// above total degree trunc.  Each generator's image is an involution there:
// (1 + u_i)^2 = 1 + u_i^2 = 1 over GF(2).
AlgElem magnus_eval(const FlagComplex& K, const GroupWord& w, int trunc);

// Sound lower bound for the dimension of the k-th graded piece of the
// group's mod-2 lower central series Lie algebra, computed through the
// Magnus embedding g_i -> 1 + u_i.
//
// Squaring a group element squares its Magnus deviation, so the classes
// obtained by repeatedly squaring a nested commutator are invisible at
// degree k and must be read higher up.  For each j = 0..k-2 the block-j
// vectors are the 2^j-th powers (computed in the word algebra) of the
// degree-(k-j) leading terms of nested commutators on k-j pairwise distinct
// letters, read at total degree 2^j (k-j).  Each block is ranked modulo a
// span that over-approximates everything the (k+1)-st lower central
// subgroup can contribute at that degree; the block degrees strictly
// increase with j, which makes the counts add up soundly.  Working-set caps
// may drop a block entirely, weakening -- never invalidating -- the bound.
//
// The tuple list is pruned by identities that preserve the span of leading
// terms: the innermost pair must be non-commuting and ascending, and an
// adjacent commuting descent anywhere earlier is skipped (swapping such a
// pair moves the element only deeper in the lower central series).
long long lower_bound_dim(const FlagComplex& K, int k, int threads = 1);

struct DegreeVerdict {
    long long n_k = 0;      // series exponent at this total degree
    long long target = 0;   // n_2 + ... + n_k: the conjectured dimension
    long long lower = 0;    // commutator-rank lower bound, always <= target
    bool verified = false;  // lower == target
};

struct ConjectureReport {
    int max_degree = 0;
    std::map<int, DegreeVerdict> degrees; // keys 2..max_degree
    bool all_verified() const;
};

// Per-degree comparison of the conjectured dimensions (series exponents,
// accumulated) against the group-side lower bound.  A degree is `verified`
// when the bound meets the target; otherwise the verdict is inconclusive.
// Throws internal_inconsistency if the bound ever exceeds the target, or if
// degree 2 or 3 fails to verify (both always hold).
ConjectureReport conjecture_status(const FlagComplex& K, int D, int threads = 1);

} // namespace racg
