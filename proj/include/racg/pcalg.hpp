#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "racg/complexes.hpp"
#include "racg/gf2.hpp"
#include "racg/series.hpp"

namespace racg {

// Multiplication rules for a quotient of the free GF(2) word algebra on x_1..x_m:
// x_i x_j = x_j x_i whenever {i,j} is an edge of K, and x_i^2 = 0 when square_zero.
struct AlgebraSpec {
    FlagComplex K;
    bool square_zero = false;

    bool commute(int a, int b) const { return K.has_edge(a, b); }
};

// A word over the letters 1..m, one letter per byte.  Words are kept in
// canonical spelling: the lexicographically least word of their commutation class.
using TraceWord = std::string;

Exponent word_multidegree(int vars, const TraceWord& w);

// Canonical spelling of base+suffix given that base is already canonical.  Each
// appended letter bubbles left past larger commuting letters; the scan continues
// past smaller commuting letters so that, under square_zero, an equal letter
// reachable through commuting letters is detected and the word reported zero
// (nullopt).
std::optional<TraceWord> normal_form_append(const AlgebraSpec& spec, TraceWord base,
                                            const TraceWord& suffix);
std::optional<TraceWord> normal_form(const AlgebraSpec& spec, const TraceWord& w);

// GF(2) sum of canonical words, with an optional total-degree truncation carried
// along.  Combining elements with two different truncation degrees is an error;
// an untruncated element combines with anything.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(std::optional<int> trunc) : trunc_(trunc) {}

    static AlgElem unit(std::optional<int> trunc = std::nullopt);
    static AlgElem generator(int i, std::optional<int> trunc = std::nullopt);

    const std::set<TraceWord>& words() const { return words_; }
    std::optional<int> trunc() const { return trunc_; }
    bool is_zero() const { return words_.empty(); }

    void toggle(const TraceWord& canonical_word); // GF(2) insert/erase
    AlgElem& operator+=(const AlgElem& o);        // XOR of supports
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    bool operator==(const AlgElem&) const = default;

    // restriction to words of one total degree / one multidegree
    AlgElem degree_part(int d) const;
    AlgElem multidegree_part(const Exponent& a) const;
    int min_degree() const; // length of the shortest word, -1 if zero

private:
    std::optional<int> trunc_;
    std::set<TraceWord> words_;

    friend AlgElem multiply(const AlgebraSpec&, const AlgElem&, const AlgElem&);
};

AlgElem multiply(const AlgebraSpec& spec, const AlgElem& a, const AlgElem& b);
AlgElem commutator(const AlgebraSpec& spec, const AlgElem& a, const AlgElem& b); // ab + ba

// All canonical nonzero words of the given multidegree, in lexicographic order:
// a GF(2) basis of the algebra's multidegree component.
std::vector<TraceWord> multidegree_basis(const AlgebraSpec& spec, const Exponent& alpha);

// Lazily built, mutex-guarded cache of multidegree bases with word->index maps.
class BasisCache {
public:
    struct Basis {
        std::vector<TraceWord> words;
        std::map<TraceWord, std::size_t> index;
    };

    explicit BasisCache(AlgebraSpec spec) : spec_(std::move(spec)) {}

    const AlgebraSpec& spec() const { return spec_; }
    std::shared_ptr<const Basis> at(const Exponent& alpha);

    // Coordinates of a homogeneous element in the multidegree-alpha basis.
    // Throws internal_inconsistency if a word falls outside the basis.
    gf2::BitVec coords(const AlgElem& e, const Exponent& alpha);

private:
    AlgebraSpec spec_;
    std::mutex mu_;
    std::map<Exponent, std::shared_ptr<const Basis>> cache_;
};

} // namespace racg
