#include "racg/pcalg.hpp"

#include <algorithm>

#include "racg/errors.hpp"

namespace racg {

Exponent word_multidegree(int vars, const TraceWord& w) {
    Exponent a(vars, 0);
    for (unsigned char c : w) a[c - 1] += 1;
    return a;
}

std::optional<TraceWord> normal_form_append(const AlgebraSpec& spec, TraceWord base,
                                            const TraceWord& suffix) {
    for (unsigned char a : suffix) {
        // a can be placed anywhere inside the maximal suffix of letters it
        // commutes with; lex-least puts it before the leftmost larger one
        std::size_t pos = base.size();
        bool zero = false;
        for (std::size_t p = base.size(); p-- > 0;) {
            unsigned char b = base[p];
            if (b == a || !spec.commute(a, b)) {
                // first letter the scan cannot pass; an equal letter here means
                // some spelling has x_a x_a adjacent
                zero = spec.square_zero && b == a;
                break;
            }
            if (b > a) pos = p;
        }
        if (zero) return std::nullopt;
        base.insert(base.begin() + pos, char(a));
    }
    return base;
}

std::optional<TraceWord> normal_form(const AlgebraSpec& spec, const TraceWord& w) {
    return normal_form_append(spec, TraceWord(), w);
}

AlgElem AlgElem::unit(std::optional<int> trunc) {
    AlgElem e(trunc);
    e.toggle(TraceWord());
    return e;
}

AlgElem AlgElem::generator(int i, std::optional<int> trunc) {
    AlgElem e(trunc);
    if (!trunc || *trunc >= 1) e.toggle(TraceWord(1, char(i)));
    return e;
}

void AlgElem::toggle(const TraceWord& w) {
    auto it = words_.find(w);
    if (it == words_.end()) words_.insert(w);
    else words_.erase(it);
}

namespace {

std::optional<int> merge_trunc(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    if (*a != *b)
        throw input_error("mixing truncation degrees " + std::to_string(*a) + " and " +
                          std::to_string(*b));
    return a;
}

} // namespace

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    trunc_ = merge_trunc(trunc_, o.trunc_);
    for (const TraceWord& w : o.words_) toggle(w);
    return *this;
}

AlgElem AlgElem::degree_part(int d) const {
    AlgElem out(trunc_);
    for (const TraceWord& w : words_)
        if (static_cast<int>(w.size()) == d) out.toggle(w);
    return out;
}

AlgElem AlgElem::multidegree_part(const Exponent& a) const {
    AlgElem out(trunc_);
    int vars = static_cast<int>(a.size());
    for (const TraceWord& w : words_)
        if (static_cast<int>(w.size()) == total_degree(a) && word_multidegree(vars, w) == a)
            out.toggle(w);
    return out;
}

int AlgElem::min_degree() const {
    int best = -1;
    for (const TraceWord& w : words_)
        if (best < 0 || static_cast<int>(w.size()) < best) best = static_cast<int>(w.size());
    return best;
}

AlgElem multiply(const AlgebraSpec& spec, const AlgElem& a, const AlgElem& b) {
    AlgElem out(merge_trunc(a.trunc(), b.trunc()));
    for (const TraceWord& wa : a.words()) {
        for (const TraceWord& wb : b.words()) {
            if (out.trunc() && static_cast<int>(wa.size() + wb.size()) > *out.trunc()) continue;
            if (auto w = normal_form_append(spec, wa, wb)) out.toggle(*w);
        }
    }
    return out;
}

AlgElem commutator(const AlgebraSpec& spec, const AlgElem& a, const AlgElem& b) {
    return multiply(spec, a, b) + multiply(spec, b, a);
}

namespace {

void basis_dfs(const AlgebraSpec& spec, Exponent& remaining, TraceWord& cur,
               std::vector<TraceWord>& out) {
    bool leaf = true;
    for (int i = 1; i <= static_cast<int>(remaining.size()); ++i) {
        if (remaining[i - 1] == 0) continue;
        leaf = false;
        // extend only when cur + i is still canonical (no commuting larger letter
        // in the scan region) and, under square_zero, nonzero
        bool ok = true;
        unsigned char a = static_cast<unsigned char>(i);
        for (std::size_t p = cur.size(); p-- > 0;) {
            unsigned char b = cur[p];
            if (b == a) {
                ok = !spec.square_zero;
                break;
            }
            if (!spec.commute(a, b)) break;
            if (b > a) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        remaining[i - 1] -= 1;
        cur.push_back(char(a));
        basis_dfs(spec, remaining, cur, out);
        cur.pop_back();
        remaining[i - 1] += 1;
    }
    if (leaf) out.push_back(cur);
}

} // namespace

std::vector<TraceWord> multidegree_basis(const AlgebraSpec& spec, const Exponent& alpha) {
    if (static_cast<int>(alpha.size()) != spec.K.m())
        throw input_error("multidegree arity does not match the vertex count");
    for (int v : alpha)
        if (v < 0) throw input_error("negative multidegree entry");
    Exponent remaining = alpha;
    TraceWord cur;
    std::vector<TraceWord> out;
    basis_dfs(spec, remaining, cur, out);
    return out; // DFS in ascending letter order emits words lexicographically
}

std::shared_ptr<const BasisCache::Basis> BasisCache::at(const Exponent& alpha) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
    auto basis = std::make_shared<Basis>();
    basis->words = multidegree_basis(spec_, alpha);
    for (std::size_t i = 0; i < basis->words.size(); ++i) basis->index[basis->words[i]] = i;
    cache_[alpha] = basis;
    return basis;
}

gf2::BitVec BasisCache::coords(const AlgElem& e, const Exponent& alpha) {
    auto basis = at(alpha);
    gf2::BitVec v(basis->words.size());
    for (const TraceWord& w : e.words()) {
        auto it = basis->index.find(w);
        if (it == basis->index.end())
            throw internal_inconsistency("word outside the multidegree component");
        v.flip(it->second);
    }
    return v;
}

} // namespace racg
