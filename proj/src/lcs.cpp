#include "racg/lcs.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <utility>

#include "racg/errors.hpp"

namespace racg {

void NKtElem::add(int tpow, const LiePoly& p) {
    if (tpow < 0) throw input_error("negative powers of t do not exist");
    if (p.is_zero()) return;
    auto [it, fresh] = entries_.try_emplace(tpow, p);
    if (fresh) return;
    it->second += p;
    if (it->second.is_zero()) entries_.erase(it);
}

NKtElem& NKtElem::operator+=(const NKtElem& o) {
    for (const auto& [tpow, p] : o.entries_) add(tpow, p);
    return *this;
}

NKtElem h(const NKtElem& x) {
    NKtElem out;
    for (const auto& [tpow, p] : x.entries()) out.add(tpow + 1, p);
    return out;
}

NKtElem bracket_nkt(const NKtElem& x, const NKtElem& y) {
    NKtElem out;
    for (const auto& [tx, px] : x.entries())
        for (const auto& [ty, py] : y.entries()) out.add(tx + ty, lie_bracket(px, py));
    return out;
}

namespace {

void check_letters(const FlagComplex& K, const std::vector<int>& letters) {
    for (int a : letters)
        if (a < 1 || a > K.m()) throw input_error("commutator letter outside the vertex range");
}

// Subsequence of v selected by the bits of mask.
std::vector<int> pick(const std::vector<int>& v, unsigned mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if ((mask >> i) & 1u) out.push_back(v[i]);
    return out;
}

using RrMemo = std::map<std::vector<int>, NKtElem>;

NKtElem remove_repeats_impl(NkContext& ctx, const std::vector<int>& letters, RrMemo& memo) {
    const std::size_t n = letters.size();
    if (letters[n - 2] == letters[n - 1]) return {}; // innermost bracket of equals
    if (auto it = memo.find(letters); it != memo.end()) return it->second;

    // innermost outer position whose letter already occurred
    std::ptrdiff_t q = -1;
    for (std::size_t pos = n - 1; pos-- > 1;) {
        if (std::find(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters[pos]) != letters.begin() + static_cast<std::ptrdiff_t>(pos)) {
            q = static_cast<std::ptrdiff_t>(pos);
            break;
        }
    }

    NKtElem out;
    if (q < 0) {
        if (std::find(letters.begin(), letters.end() - 1, letters[n - 1]) != letters.end() - 1) {
            // Only the core letter repeats.  The innermost bracket is
            // symmetric over GF(2), so swap it into the outer run first.
            std::vector<int> swapped = letters;
            std::swap(swapped[n - 2], swapped[n - 1]);
            out = remove_repeats_impl(ctx, swapped, memo);
        } else {
            out = NKtElem(0, express_in_gptw(ctx, letters)); // pairwise distinct
        }
        memo.emplace(letters, out);
        return out;
    }

    // letters = W (i) V (i) X with both marked letters equal to i: trade the
    // outer i for one degree shift plus brackets of shorter commutators, one
    // term per way of routing W around the split and a nonempty part of V
    // into the left factor.
    const int i = letters[static_cast<std::size_t>(q)];
    const std::size_t p = static_cast<std::size_t>(
        std::find(letters.begin(), letters.end(), i) - letters.begin());
    std::vector<int> W(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p));
    std::vector<int> V(letters.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                       letters.begin() + q);
    std::vector<int> X(letters.begin() + q + 1, letters.end());

    std::vector<int> dropped = W;
    dropped.insert(dropped.end(), V.begin(), V.end());
    dropped.push_back(i);
    dropped.insert(dropped.end(), X.begin(), X.end());
    out = h(remove_repeats_impl(ctx, dropped, memo));

    const unsigned wfull = (1u << W.size()) - 1u;
    const unsigned vfull = (1u << V.size()) - 1u;
    for (unsigned cm = 0;; ++cm) {
        std::vector<int> C = pick(W, cm), D = pick(W, wfull & ~cm);
        for (unsigned am = 1; am <= vfull; ++am) {
            std::vector<int> first = C;
            std::vector<int> a = pick(V, am);
            first.insert(first.end(), a.begin(), a.end());
            first.push_back(i);
            std::vector<int> second = D;
            std::vector<int> b = pick(V, vfull & ~am);
            second.insert(second.end(), b.begin(), b.end());
            second.push_back(i);
            second.insert(second.end(), X.begin(), X.end());
            out += bracket_nkt(remove_repeats_impl(ctx, first, memo),
                               remove_repeats_impl(ctx, second, memo));
        }
        if (cm == wfull) break;
    }
    memo.emplace(letters, out);
    return out;
}

} // namespace

NKtElem remove_repeats(NkContext& ctx, const std::vector<int>& letters) {
    if (letters.size() < 2) throw input_error("nested commutators need at least two letters");
    check_letters(ctx.complex(), letters);
    RrMemo memo;
    return remove_repeats_impl(ctx, letters, memo);
}

LElem& LElem::operator+=(const LElem& o) {
    for (int i : o.linear) {
        auto [it, fresh] = linear.insert(i);
        if (!fresh) linear.erase(it);
    }
    comm += o.comm;
    return *this;
}

LElem h(const LElem& x) {
    if (!x.linear.empty())
        throw input_error("h is undefined on degree-1 classes (generators square to 1)");
    return LElem{{}, h(x.comm)};
}

namespace {

std::vector<int> entry_letters(const GptwEntry& g) {
    std::vector<int> letters = g.outer();
    letters.push_back(g.j);
    return letters;
}

NKtElem g_bracket_tree(NkContext& ctx, int i, const LieTreePtr& t, RrMemo& memo) {
    switch (t->kind) {
        case LieTree::Kind::mu:
            throw input_error("degree-1 letters cannot appear in a commutator part");
        case LieTree::Kind::nested: {
            std::vector<int> letters{i};
            letters.insert(letters.end(), t->outer.begin(), t->outer.end());
            letters.push_back(t->core);
            return remove_repeats_impl(ctx, letters, memo);
        }
        case LieTree::Kind::gptw: {
            std::vector<int> inner = entry_letters(ctx.gens().at(static_cast<std::size_t>(t->gptw)));
            std::vector<int> letters{i};
            letters.insert(letters.end(), inner.begin(), inner.end());
            return remove_repeats_impl(ctx, letters, memo);
        }
        case LieTree::Kind::bracket: {
            NKtElem out = bracket_nkt(g_bracket_tree(ctx, i, t->left, memo),
                                      NKtElem(0, LiePoly(t->right)));
            out += bracket_nkt(NKtElem(0, LiePoly(t->left)),
                               g_bracket_tree(ctx, i, t->right, memo));
            return out;
        }
    }
    throw internal_inconsistency("unhandled tree kind");
}

// [g_i, x] for x over N_K[t]: the derivation acts on each polynomial and the
// t-powers pass through.
NKtElem g_bracket(NkContext& ctx, int i, const NKtElem& x) {
    RrMemo memo;
    NKtElem out;
    for (const auto& [tpow, poly] : x.entries())
        for (const LieTreePtr& t : poly.trees()) {
            NKtElem d = g_bracket_tree(ctx, i, t, memo);
            for (const auto& [dt, dp] : d.entries()) out.add(tpow + dt, dp);
        }
    return out;
}

} // namespace

LElem bracket_L(NkContext& ctx, const LElem& x, const LElem& y) {
    const FlagComplex& K = ctx.complex();
    LElem out;
    for (int i : x.linear)
        for (int j : y.linear) {
            if (i == j || K.has_edge(i, j)) continue;
            int lo = std::min(i, j), hi = std::max(i, j);
            int gid = ctx.gptw_id(vertex_bit(lo) | vertex_bit(hi), lo);
            if (gid < 0)
                throw internal_inconsistency("missing degree-2 entry for a non-edge");
            out.comm.add(0, LiePoly(LieTree::gptw_leaf(gid)));
        }
    for (int i : x.linear) out.comm += g_bracket(ctx, i, y.comm);
    for (int j : y.linear) out.comm += g_bracket(ctx, j, x.comm); // GF(2): [x,y] = [y,x]
    out.comm += bracket_nkt(x.comm, y.comm);
    return out;
}

NKtElem canonicalize(NkContext& ctx, const NKtElem& x) {
    const int m = ctx.complex().m();
    NKtElem out;
    for (const auto& [tpow, poly] : x.entries()) {
        std::map<Exponent, LiePoly> groups;
        for (const LieTreePtr& t : poly.trees())
            groups[tree_multidegree(ctx.gens(), m, t)].toggle(t);
        for (const auto& [alpha, part] : groups) {
            AlgElem v = ctx.eval(part);
            if (v.is_zero()) continue;
            auto comp = ctx.component(alpha);
            auto expr = comp->express(ctx.abasis().coords(v, alpha));
            if (!expr)
                throw internal_inconsistency("commutator part escaped the generated subalgebra");
            out.add(tpow, *expr);
        }
    }
    return out;
}

LElem canonicalize(NkContext& ctx, const LElem& x) {
    return LElem{x.linear, canonicalize(ctx, x.comm)};
}

bool nkt_equal(NkContext& ctx, const NKtElem& a, const NKtElem& b) {
    std::set<int> tpows;
    for (const auto& [t, p] : a.entries()) tpows.insert(t);
    for (const auto& [t, p] : b.entries()) tpows.insert(t);
    LiePoly zero;
    for (int t : tpows) {
        auto ia = a.entries().find(t);
        auto ib = b.entries().find(t);
        const LiePoly& pa = ia == a.entries().end() ? zero : ia->second;
        const LiePoly& pb = ib == b.entries().end() ? zero : ib->second;
        if (ctx.eval(pa) != ctx.eval(pb)) return false;
    }
    return true;
}

bool lelem_equal(NkContext& ctx, const LElem& a, const LElem& b) {
    return a.linear == b.linear && nkt_equal(ctx, a.comm, b.comm);
}

namespace {

GroupWord tree_word(NkContext& ctx, const LieTreePtr& t) {
    const FlagComplex& K = ctx.complex();
    switch (t->kind) {
        case LieTree::Kind::mu:
            throw input_error("degree-1 letters cannot appear in a commutator part");
        case LieTree::Kind::nested: {
            std::vector<int> letters = t->outer;
            letters.push_back(t->core);
            return nested_word(K, letters);
        }
        case LieTree::Kind::gptw:
            return nested_word(K, entry_letters(ctx.gens().at(static_cast<std::size_t>(t->gptw))));
        case LieTree::Kind::bracket:
            return group_commutator(K, tree_word(ctx, t->left), tree_word(ctx, t->right));
    }
    throw internal_inconsistency("unhandled tree kind");
}

} // namespace

std::vector<GroupWord> psi_to_group(NkContext& ctx, const NKtElem& x) {
    const FlagComplex& K = ctx.complex();
    std::vector<GroupWord> out;
    for (const auto& [tpow, poly] : x.entries())
        for (const LieTreePtr& t : poly.trees()) {
            GroupWord w = tree_word(ctx, t);
            for (int s = 0; s < tpow; ++s) { // each power of t squares the word
                GroupWord doubled = w;
                doubled.insert(doubled.end(), w.begin(), w.end());
                w = racg_normal_form(K, doubled);
            }
            out.push_back(std::move(w));
        }
    return out;
}

GroupWord psi_rep(NkContext& ctx, const NKtElem& x) {
    GroupWord prod;
    for (const GroupWord& w : psi_to_group(ctx, x))
        prod.insert(prod.end(), w.begin(), w.end());
    return racg_normal_form(ctx.complex(), prod);
}

namespace {

struct Parser {
    NkContext& ctx;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw input_error("expression error at position " + std::to_string(pos) + ": " + why);
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }

    LElem parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected an expression");
        char c = s[pos];
        if (c == '[') {
            ++pos;
            LElem l = parse_expr();
            if (!eat(',')) fail("expected ',' inside a bracket");
            LElem r = parse_expr();
            if (!eat(']')) fail("expected ']'");
            return bracket_L(ctx, l, r);
        }
        if (c == 'g' || c == 'q') {
            ++pos;
            int n = parse_int();
            if (c == 'g') {
                if (n < 1 || n > ctx.complex().m()) fail("generator index out of range");
                return LElem{{n}, {}};
            }
            if (n < 1 || static_cast<std::size_t>(n) > ctx.gens().size())
                fail("generating-set index out of range");
            return LElem{{}, NKtElem(0, LiePoly(LieTree::gptw_leaf(n - 1)))};
        }
        if (c == '0') {
            ++pos;
            return {};
        }
        fail("expected 'g', 'q', '[' or '0'");
    }

    LElem parse_term() {
        LElem e = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            int k = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                k = parse_int(); // zero is the identity shift
            }
            for (int i = 0; i < k; ++i) e = h(e);
        }
        return e;
    }

    LElem parse_expr() {
        LElem e = parse_term();
        while (eat('+')) e += parse_term();
        return e;
    }
};

std::string tree_to_string(const LieTreePtr& t) {
    switch (t->kind) {
        case LieTree::Kind::gptw:
            return "q" + std::to_string(t->gptw + 1);
        case LieTree::Kind::bracket:
            return "[" + tree_to_string(t->left) + "," + tree_to_string(t->right) + "]";
        default:
            throw internal_inconsistency("canonical form holds only entries and brackets");
    }
}

} // namespace

LElem parse_lelem(NkContext& ctx, const std::string& text) {
    Parser p{ctx, text};
    LElem e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string format_lelem(NkContext& ctx, const LElem& x) {
    LElem c = canonicalize(ctx, x);
    std::string out;
    auto append = [&](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    for (int i : c.linear) append("g" + std::to_string(i));
    for (const auto& [tpow, poly] : c.comm.entries())
        for (const LieTreePtr& t : poly.trees()) {
            std::string term = tree_to_string(t);
            if (tpow == 1) term += " t";
            else if (tpow > 1) term += " t^" + std::to_string(tpow);
            append(term);
        }
    return out.empty() ? "0" : out;
}

} // namespace racg
