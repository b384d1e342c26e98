#include "racg/coxeter.hpp"

#include <algorithm>
#include <string>

#include "racg/errors.hpp"
#include "racg/parallel.hpp"

namespace racg {

GroupWord racg_normal_form(const FlagComplex& K, const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (int a : w) {
        if (a < 1 || a > K.m()) throw input_error("group word letter outside the vertex range");
        // a moves freely through the maximal suffix of letters it commutes
        // with: it cancels against a copy of itself found there, and
        // otherwise sits before the leftmost larger letter of that suffix
        std::ptrdiff_t cancel = -1;
        std::size_t pos = out.size();
        for (std::size_t p = out.size(); p-- > 0;) {
            int b = out[p];
            if (b == a) {
                cancel = static_cast<std::ptrdiff_t>(p);
                break;
            }
            if (!K.has_edge(a, b)) break;
            if (b > a) pos = p;
        }
        if (cancel >= 0) out.erase(out.begin() + cancel);
        else out.insert(out.begin() + pos, a);
    }
    return out;
}

GroupWord group_commutator(const FlagComplex& K, const GroupWord& a, const GroupWord& b) {
    GroupWord w = inverse_word(a);
    GroupWord ib = inverse_word(b);
    w.insert(w.end(), ib.begin(), ib.end());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return racg_normal_form(K, w);
}

GroupWord nested_word(const FlagComplex& K, const std::vector<int>& letters) {
    if (letters.empty()) throw input_error("empty nested commutator");
    GroupWord c{letters.back()};
    for (std::size_t i = letters.size() - 1; i-- > 0;)
        c = group_commutator(K, GroupWord{letters[i]}, c);
    return racg_normal_form(K, c);
}

AlgElem magnus_eval(const FlagComplex& K, const GroupWord& w, int trunc) {
    if (trunc < 1) throw input_error("series truncation must be at least 1");
    AlgebraSpec spec{K, true};
    AlgElem acc = AlgElem::unit(trunc);
    for (int a : w) {
        if (a < 1 || a > K.m()) throw input_error("group word letter outside the vertex range");
        AlgElem gen = AlgElem::unit(trunc) + AlgElem::generator(a, trunc);
        acc = multiply(spec, acc, gen);
    }
    return acc;
}

namespace {

// Working-set caps.  When one trips, the affected block is dropped and the
// bound merely weakens, except for the raw tuple enumeration which throws.
constexpr std::size_t kSupportCap = 60000; // words tracked per element
constexpr std::size_t kLevelCap = 512;     // deduplicated values per commutator weight
constexpr std::size_t kFactorCap = 1024;   // deviation factors fed into products
constexpr std::size_t kProductCap = 2048;  // simultaneous partial products
constexpr std::size_t kTupleCap = 2000000; // enumerated generator tuples
constexpr long long kDegreeCap = 4096;     // largest reading degree attempted

// Same support, different truncation (the words are already canonical).
AlgElem retrunc(const AlgElem& e, int trunc) {
    AlgElem out{std::optional<int>(trunc)};
    for (const TraceWord& w : e.words()) out.toggle(w);
    return out;
}

// Inverse of x = 1 + Z with Z of positive minimal degree: 1 + Z + Z^2 + ...
// terminates inside the truncation.
AlgElem unipotent_inverse(const AlgebraSpec& spec, const AlgElem& x) {
    if (!x.trunc())
        throw internal_inconsistency("unipotent inversion requires a truncated element");
    AlgElem unit = AlgElem::unit(x.trunc());
    AlgElem z = x + unit;
    if (!z.is_zero() && z.min_degree() == 0)
        throw internal_inconsistency("group image lost its unit term");
    AlgElem acc = unit;
    AlgElem pw = unit;
    for (;;) {
        pw = multiply(spec, pw, z);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc;
}

// (a, b) = a^-1 b^-1 a b evaluated on truncated Magnus images.  Depends only
// on the truncated operands, so values may be deduplicated before recursing.
AlgElem commutator_value(const AlgebraSpec& spec, const AlgElem& a, const AlgElem& b) {
    AlgElem left = multiply(spec, unipotent_inverse(spec, a), unipotent_inverse(spec, b));
    return multiply(spec, left, multiply(spec, a, b));
}

// Spanning set for every degree-d Magnus component the nmin-th lower central
// subgroup can produce.  Modulo deeper terms any member is a product of
// left-normed simple commutators of weights nmin..d (deeper remainders are
// invisible at degree d), the Magnus image of such a product expands into
// ordered products of single-commutator deviations, and inverses expand into
// powers.  So the span is covered by degree-d components of products of the
// deduplicated truncated deviations collected here.  nullopt on cap trip:
// callers must then discard whatever the span was protecting.
std::optional<std::vector<AlgElem>> deep_component_span(const AlgebraSpec& spec, int nmin,
                                                        int d) {
    if (nmin > d) return std::vector<AlgElem>{}; // filtration: nothing reaches degree d
    const FlagComplex& K = spec.K;
    const int m = K.m();
    AlgElem unit = AlgElem::unit(d);
    std::vector<AlgElem> gen;
    gen.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) gen.push_back(unit + AlgElem::generator(i, d));

    std::vector<AlgElem> factors; // deviations of weight nmin..d commutator values
    std::vector<AlgElem> level;   // current-weight commutator values
    std::set<std::set<TraceWord>> seen;
    bool capped = false;
    auto push = [&](std::vector<AlgElem>& dst, AlgElem v) {
        AlgElem dev = v + unit;
        if (dev.is_zero()) return; // trivial at this truncation; so are its descendants
        if (dev.words().size() > kSupportCap || dst.size() >= kLevelCap) {
            capped = true;
            return;
        }
        if (seen.insert(dev.words()).second) dst.push_back(std::move(v));
    };
    for (int a = 1; a <= m && !capped; ++a)
        for (int b = 1; b <= m && !capped; ++b)
            if (a != b && !K.has_edge(a, b))
                push(level, commutator_value(spec, gen[a - 1], gen[b - 1]));
    for (int c = 2; c <= d && !capped && !level.empty(); ++c) {
        if (c >= nmin)
            for (const AlgElem& v : level) {
                if (factors.size() >= kFactorCap) {
                    capped = true;
                    break;
                }
                factors.push_back(v + unit);
            }
        if (c == d || capped) break;
        std::vector<AlgElem> next;
        seen.clear();
        for (const AlgElem& v : level) {
            for (int i = 1; i <= m && !capped; ++i)
                push(next, commutator_value(spec, v, gen[i - 1]));
            if (capped) break;
        }
        level = std::move(next);
    }
    if (capped) return std::nullopt;

    std::vector<AlgElem> comps;
    std::vector<AlgElem> cur = factors; // products of r factors, r = 1, 2, ...
    while (!cur.empty()) {
        for (const AlgElem& p : cur) {
            AlgElem comp = p.degree_part(d);
            if (!comp.is_zero()) comps.push_back(comp);
        }
        std::vector<AlgElem> next;
        seen.clear();
        for (const AlgElem& p : cur)
            for (const AlgElem& y : factors) {
                AlgElem q = multiply(spec, p, y);
                if (q.is_zero()) continue;
                if (q.words().size() > kSupportCap || next.size() >= kProductCap)
                    return std::nullopt;
                if (seen.insert(q.words()).second) next.push_back(std::move(q));
            }
        cur = std::move(next); // factor degrees add, so the rounds die out
    }
    return comps;
}

// Length-e tuples of pairwise distinct letters with the innermost pair
// ascending and non-commuting and no adjacent commuting descent.  Swapping a
// commuting descent changes the nested commutator only deeper in the lower
// central series, so the span of leading terms survives the pruning.
void block_tuples_rec(const FlagComplex& K, int e, std::vector<int>& cur, std::vector<char>& used,
                      std::vector<std::vector<int>>& out) {
    int t = static_cast<int>(cur.size());
    if (t == e) {
        if (out.size() >= kTupleCap)
            throw resource_limit("nested commutator enumeration exceeded " +
                                 std::to_string(kTupleCap) + " tuples");
        out.push_back(cur);
        return;
    }
    for (int a = 1; a <= K.m(); ++a) {
        if (used[static_cast<std::size_t>(a)]) continue;
        if (t == e - 1) {
            if (!(cur[static_cast<std::size_t>(t) - 1] < a &&
                  !K.has_edge(cur[static_cast<std::size_t>(t) - 1], a)))
                continue;
        } else if (t > 0 && cur[static_cast<std::size_t>(t) - 1] > a &&
                   K.has_edge(cur[static_cast<std::size_t>(t) - 1], a)) {
            continue;
        }
        used[static_cast<std::size_t>(a)] = 1;
        cur.push_back(a);
        block_tuples_rec(K, e, cur, used, out);
        cur.pop_back();
        used[static_cast<std::size_t>(a)] = 0;
    }
}

std::vector<std::vector<int>> block_tuples(const FlagComplex& K, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(static_cast<std::size_t>(K.m()) + 1, 0);
    block_tuples_rec(K, e, cur, used, out);
    return out;
}

} // namespace

long long lower_bound_dim(const FlagComplex& K, int k, int threads) {
    if (k < 2) throw input_error("graded pieces start at degree 2");
    AlgebraSpec spec{K, true};
    long long total = 0;
    for (int j = 0; j <= k - 2; ++j) {
        int e = k - j;
        if (e > K.m()) continue; // pairwise distinct letters are impossible
        long long wide = static_cast<long long>(e) << j;
        if (wide > kDegreeCap) continue; // reading degree out of reach; skip soundly
        int d = static_cast<int>(wide);

        auto tuples = block_tuples(K, e);
        if (tuples.empty()) continue;

        // Leading terms: the deviation of a weight-e commutator starts at
        // degree e, and raising the element to the 2^j-th power squares the
        // deviation j times, leaving exactly the 2^j-th power of the leading
        // term at degree 2^j e.
        std::vector<AlgElem> vecs(tuples.size());
        parallel_for(tuples.size(), threads, [&](std::size_t i) {
            GroupWord w = nested_word(K, tuples[i]);
            AlgElem dev = magnus_eval(K, w, e) + AlgElem::unit(e);
            int md = dev.min_degree();
            if (md != -1 && md < e)
                throw internal_inconsistency(
                    "a length-" + std::to_string(e) +
                    " nested commutator has a Magnus component below its filtration degree");
            AlgElem v = retrunc(dev.degree_part(e), d);
            for (int s = 0; s < j && !v.is_zero(); ++s) {
                v = multiply(spec, v, v);
                if (v.words().size() > kSupportCap) { // drop just this vector
                    v = AlgElem{std::optional<int>(d)};
                    break;
                }
            }
            vecs[i] = std::move(v);
        });
        bool any = false;
        for (const AlgElem& v : vecs) any = any || !v.is_zero();
        if (!any) continue;

        auto noise = deep_component_span(spec, k + 1, d);
        if (!noise) continue; // cannot bound the deeper terms; skip the block

        std::map<TraceWord, std::size_t> col;
        for (const AlgElem& eV : *noise)
            for (const TraceWord& w : eV.words()) col.emplace(w, col.size());
        for (const AlgElem& eV : vecs)
            for (const TraceWord& w : eV.words()) col.emplace(w, col.size());
        gf2::Solver solver(col.size());
        auto to_bits = [&](const AlgElem& eV) {
            gf2::BitVec v(col.size());
            for (const TraceWord& w : eV.words()) v.flip(col.at(w));
            return v;
        };
        for (const AlgElem& eV : *noise) solver.add(to_bits(eV));
        for (const AlgElem& eV : vecs)
            if (!eV.is_zero() && solver.add(to_bits(eV))) ++total;
    }
    return total;
}

bool ConjectureReport::all_verified() const {
    for (const auto& [k, v] : degrees)
        if (!v.verified) return false;
    return true;
}

ConjectureReport conjecture_status(const FlagComplex& K, int D, int threads) {
    if (D < 2) throw input_error("conjecture check needs max degree >= 2");
    DimTable table = extract_exponents(rhs_poly(K), D);
    std::map<int, long long> n = table.by_total_degree();
    auto n_at = [&](int d) {
        auto it = n.find(d);
        return it == n.end() ? 0LL : it->second;
    };

    // degrees 2 and 3 have closed forms in terms of small induced subcomplexes
    SubcomplexTypeCounts c = subcomplex_type_counts(K);
    if (n_at(2) != c.non_edge_pair)
        throw internal_inconsistency("degree-2 exponent disagrees with the non-edge count");
    if (n_at(3) != 2 * c.three_discrete + c.edge_plus_point)
        throw internal_inconsistency("degree-3 exponent disagrees with its subcomplex count");

    ConjectureReport rep;
    rep.max_degree = D;
    long long target = 0;
    for (int k = 2; k <= D; ++k) {
        DegreeVerdict v;
        v.n_k = n_at(k);
        target += v.n_k;
        v.target = target;
        v.lower = lower_bound_dim(K, k, threads);
        if (v.lower > v.target)
            throw internal_inconsistency("degree-" + std::to_string(k) +
                                         " lower bound exceeds the dimension target");
        v.verified = v.lower == v.target;
        if (k <= 3 && !v.verified)
            throw internal_inconsistency("degree-" + std::to_string(k) +
                                         " failed to verify; it always holds");
        rep.degrees[k] = v;
    }
    return rep;
}

} // namespace racg
