#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/nk.hpp"

namespace racg {

// Polynomial module N_K[t]: one GF(2) Lie polynomial per power of the
// degree-raising symbol t.  The entry at power n holding a polynomial of
// word degree w represents a class in graded degree n + w.  Zero
// polynomials are never stored.
class NKtElem {
public:
    NKtElem() = default;
    NKtElem(int tpow, const LiePoly& p) { add(tpow, p); }

    const std::map<int, LiePoly>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(int tpow, const LiePoly& p); // GF(2) accumulate, prunes zeros
    NKtElem& operator+=(const NKtElem& o);
    friend NKtElem operator+(NKtElem a, const NKtElem& b) { return a += b; }
    bool operator==(const NKtElem&) const = default; // structural

private:
    std::map<int, LiePoly> entries_;
};

// The degree-raising operation: multiplication by t.  On group classes this
// is squaring, which sends degree-k classes to degree-(k+1) classes.
NKtElem h(const NKtElem& x);

// [x t^k, y t^l] = [x, y] t^(k+l), extended bilinearly.
NKtElem bracket_nkt(const NKtElem& x, const NKtElem& y);

// Rewrites the nested commutator of group generators with the given letters
// (outer letters in order, core last) as an N_K[t] element: sums of
// t-shifted generating-set combinations whose group realization represents
// the same class.  Letters with repeats are eliminated one innermost,
// leftmost pair at a time; each step trades the pair for one t-shift plus
// brackets of strictly shorter commutators, so the recursion terminates.
NKtElem remove_repeats(NkContext& ctx, const std::vector<int>& letters);

// Element of the graded Lie algebra of the group in the calculator's
// presentation: a degree-1 part spanned by the generator classes g_i and a
// commutator part presented over N_K[t].
struct LElem {
    std::set<int> linear; // generator indices with coefficient 1
    NKtElem comm;

    bool is_zero() const { return linear.empty() && comm.is_zero(); }
    LElem& operator+=(const LElem& o);
    friend LElem operator+(LElem a, const LElem& b) { return a += b; }
    bool operator==(const LElem&) const = default; // structural
};

// h on the full presentation; the degree-1 part has no image (generators
// square to the identity), so a nonzero linear part is a domain error.
LElem h(const LElem& x);

// The calculator bracket.  [g_i, g_j] is the degree-2 generating-set entry
// for a non-edge (larger letter outermost) and 0 for an edge; [g_i, -] acts
// on commutator parts through remove_repeats and the derivation rule
// [g_i,[u,v]] = [[g_i,u],v] + [u,[g_i,v]], with t-powers passing through;
// commutator parts bracket by t-degree convolution.  The output of a
// bracket never has a linear part.
LElem bracket_L(NkContext& ctx, const LElem& x, const LElem& y);

// Re-expresses every polynomial over the per-multidegree component bases.
// Canonical within a fixed basis-construction order; two elements are equal
// as classes iff their canonical forms coincide structurally.
NKtElem canonicalize(NkContext& ctx, const NKtElem& x);
LElem canonicalize(NkContext& ctx, const LElem& x);

// Exact equality of the represented classes (by evaluation in the word
// algebra, which is faithful on Lie elements).
bool nkt_equal(NkContext& ctx, const NKtElem& a, const NKtElem& b);
bool lelem_equal(NkContext& ctx, const LElem& a, const LElem& b);

// One group word per monomial: generating-set entries and nested leaves
// become nested commutator words, brackets become group commutators, and
// each power of t squares the word.  The product of the words represents
// the class; psi_rep returns that product in normal form.
std::vector<GroupWord> psi_to_group(NkContext& ctx, const NKtElem& x);
GroupWord psi_rep(NkContext& ctx, const NKtElem& x);

// Calculator expression grammar:
//   expr := '0' | term (' + ' term)*
//   term := atom ('t' | 't^' INT)?
//   atom := 'g' INT | 'q' INT | '[' expr ',' expr ']'
// gN is the degree-1 class of generator N, qN the N-th generating-set
// entry.  Brackets evaluate through bracket_L during parsing; the t-suffix
// applies h and therefore rejects terms with a linear part.
LElem parse_lelem(NkContext& ctx, const std::string& text);

// Canonicalized rendering in the same grammar ("0" for zero).
std::string format_lelem(NkContext& ctx, const LElem& x);

} // namespace racg
