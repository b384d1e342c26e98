#include "racg/nk.hpp"

#include <algorithm>

#include "racg/errors.hpp"
#include "racg/parallel.hpp"

namespace racg {

LieTreePtr LieTree::mu(int i) {
    auto t = std::make_shared<LieTree>();
    t->kind = Kind::mu;
    t->core = i;
    return t;
}

LieTreePtr LieTree::nested(std::vector<int> outer, int core) {
    if (outer.empty()) return mu(core);
    for (std::size_t i = 0; i + 1 < outer.size(); ++i)
        if (outer[i] >= outer[i + 1])
            throw input_error("nested commutator wrap letters must be ascending");
    for (int v : outer)
        if (v == core) throw input_error("nested commutator leaf has a repeated letter");
    auto t = std::make_shared<LieTree>();
    t->kind = Kind::nested;
    t->core = core;
    t->outer = std::move(outer);
    return t;
}

LieTreePtr LieTree::gptw_leaf(int index) {
    auto t = std::make_shared<LieTree>();
    t->kind = Kind::gptw;
    t->gptw = index;
    return t;
}

LieTreePtr LieTree::bracket(LieTreePtr l, LieTreePtr r) {
    auto t = std::make_shared<LieTree>();
    t->kind = Kind::bracket;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

int tree_compare(const LieTreePtr& a, const LieTreePtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    switch (a->kind) {
        case LieTree::Kind::mu:
            return a->core < b->core ? -1 : a->core > b->core ? 1 : 0;
        case LieTree::Kind::nested:
            if (a->outer != b->outer) return a->outer < b->outer ? -1 : 1;
            return a->core < b->core ? -1 : a->core > b->core ? 1 : 0;
        case LieTree::Kind::gptw:
            return a->gptw < b->gptw ? -1 : a->gptw > b->gptw ? 1 : 0;
        case LieTree::Kind::bracket: {
            int c = tree_compare(a->left, b->left);
            return c != 0 ? c : tree_compare(a->right, b->right);
        }
    }
    return 0;
}

void LiePoly::toggle(LieTreePtr t) {
    auto it = trees_.find(t);
    if (it == trees_.end()) trees_.insert(std::move(t));
    else trees_.erase(it);
}

LiePoly& LiePoly::operator+=(const LiePoly& o) {
    for (const auto& t : o.trees_) toggle(t);
    return *this;
}

bool LiePoly::operator==(const LiePoly& o) const {
    if (trees_.size() != o.trees_.size()) return false;
    auto it = o.trees_.begin();
    for (const auto& t : trees_)
        if (tree_compare(t, *it++) != 0) return false;
    return true;
}

LiePoly lie_bracket(const LiePoly& a, const LiePoly& b) {
    LiePoly out;
    for (const auto& ta : a.trees())
        for (const auto& tb : b.trees()) out.toggle(LieTree::bracket(ta, tb));
    return out;
}

Exponent tree_multidegree(const GptwIndex& gens, int vars, const LieTreePtr& t) {
    Exponent a(vars, 0);
    switch (t->kind) {
        case LieTree::Kind::mu: a[t->core - 1] += 1; break;
        case LieTree::Kind::nested:
            a[t->core - 1] += 1;
            for (int v : t->outer) a[v - 1] += 1;
            break;
        case LieTree::Kind::gptw:
            for (int v : vertices_of(gens.at(t->gptw).J)) a[v - 1] += 1;
            break;
        case LieTree::Kind::bracket: {
            Exponent l = tree_multidegree(gens, vars, t->left);
            Exponent r = tree_multidegree(gens, vars, t->right);
            for (int i = 0; i < vars; ++i) a[i] = l[i] + r[i];
            break;
        }
    }
    return a;
}

LieTreePtr nested_tree(const std::vector<int>& letters) {
    if (letters.empty()) throw input_error("empty nested commutator");
    LieTreePtr t = LieTree::mu(letters.back());
    for (std::size_t i = letters.size() - 1; i-- > 0;)
        t = LieTree::bracket(LieTree::mu(letters[i]), t);
    return t;
}

namespace {

// wrap a polynomial with mu letters, innermost last: c_{mu,V}(positions, p)
LiePoly wrap_positions(const std::vector<int>& positions, const std::vector<int>& V,
                       const LiePoly& p) {
    LiePoly out = p;
    for (std::size_t i = positions.size(); i-- > 0;) {
        LiePoly next;
        for (const auto& t : out.trees())
            next.toggle(LieTree::bracket(LieTree::mu(V[positions[i]]), t));
        out = next;
    }
    return out;
}

} // namespace

LiePoly expand_c(const std::vector<int>& I, const LiePoly& x, const LiePoly& y,
                 const std::vector<int>& V) {
    for (int p : I)
        if (p < 0 || p >= static_cast<int>(V.size()))
            throw input_error("wrap position outside the letter sequence");
    LiePoly out;
    std::size_t n = I.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> A, B;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? A : B).push_back(I[i]);
        out += lie_bracket(wrap_positions(A, V, x), wrap_positions(B, V, y));
    }
    return out;
}

LiePoly order_nested(const std::vector<int>& letters) {
    if (letters.size() < 2) throw input_error("nested commutator needs at least two letters");
    {
        std::vector<int> sorted = letters;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("ordering requires pairwise distinct letters");
    }
    std::vector<int> V(letters.begin(), letters.end() - 1);
    int core = letters.back();
    std::size_t k = V.size();

    if (k == 1) {
        LiePoly out;
        if (V[0] > core) out.toggle(LieTree::nested({V[0]}, core));
        else out.toggle(LieTree::nested({core}, V[0]));
        return out;
    }

    // bubble an out-of-order adjacent pair inside the prefix V[0..k-2]; the
    // correction c_{V'}(all, [[mu_a, mu_b], rest]) splits into shorter pieces
    for (std::size_t t = 0; t + 1 <= k - 2; ++t) {
        if (V[t] <= V[t + 1]) continue;
        std::vector<int> swapped = letters;
        std::swap(swapped[t], swapped[t + 1]);
        LiePoly out = order_nested(swapped);

        std::vector<int> rest(V.begin() + t + 2, V.end());
        rest.push_back(core);
        std::size_t w = t; // positions 0..t-1 wrap the corrector
        for (std::uint32_t mask = 0; mask < (1u << w); ++mask) {
            std::vector<int> left_letters, right_letters;
            for (std::size_t i = 0; i < w; ++i)
                ((mask >> i) & 1u ? left_letters : right_letters).push_back(V[i]);
            left_letters.push_back(V[t]);
            left_letters.push_back(V[t + 1]); // core of the left piece
            right_letters.insert(right_letters.end(), rest.begin(), rest.end());
            out += lie_bracket(order_nested(left_letters), order_nested(right_letters));
        }
        return out;
    }

    // prefix ascending; make the innermost bracket point the right way
    std::vector<int> W = V;
    int c = core;
    if (W[k - 1] < c) std::swap(W[k - 1], c);

    if (W[k - 2] < W[k - 1]) {
        LiePoly out;
        out.toggle(LieTree::nested(W, c)); // fully ascending, max above the core
        return out;
    }

    // tail Jacobi: [a,[b,x]] = [x,[a,b]] + [b,[a,x]] with a = W[k-2], b = W[k-1]
    std::vector<int> first(W.begin(), W.end() - 2), second = first;
    first.push_back(c);
    first.push_back(W[k - 2]);
    first.push_back(W[k - 1]); // ... core W[k-1]
    second.push_back(W[k - 1]);
    second.push_back(W[k - 2]);
    second.push_back(c); // ... core c
    return order_nested(first) + order_nested(second);
}

NkContext::NkContext(FlagComplex K)
    : spec_{std::move(K), false}, gens_(gptw_index(spec_.K)), abasis_(spec_) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const GptwEntry& g = gens_[i];
        gid_[{g.J, g.j}] = static_cast<int>(i);
    }
    gen_elems_.reserve(gens_.size());
    for (const GptwEntry& g : gens_) {
        std::vector<int> letters = g.outer();
        letters.push_back(g.j);
        AlgElem e = AlgElem::generator(letters.back());
        for (std::size_t i = letters.size() - 1; i-- > 0;)
            e = commutator(spec_, AlgElem::generator(letters[i]), e);
        gen_elems_.push_back(std::move(e));
    }
}

int NkContext::gptw_id(VertexSet J, int j) const {
    auto it = gid_.find({J, j});
    return it == gid_.end() ? -1 : it->second;
}

AlgElem NkContext::eval(const LieTreePtr& t) {
    switch (t->kind) {
        case LieTree::Kind::mu: return AlgElem::generator(t->core);
        case LieTree::Kind::nested: {
            AlgElem e = AlgElem::generator(t->core);
            for (std::size_t i = t->outer.size(); i-- > 0;)
                e = commutator(spec_, AlgElem::generator(t->outer[i]), e);
            return e;
        }
        case LieTree::Kind::gptw: return gen_elems_.at(t->gptw);
        case LieTree::Kind::bracket: return commutator(spec_, eval(t->left), eval(t->right));
    }
    return AlgElem();
}

AlgElem NkContext::eval(const LiePoly& p) {
    AlgElem out;
    for (const auto& t : p.trees()) out += eval(t);
    return out;
}

std::optional<LiePoly> NkContext::Component::express(const gf2::BitVec& coords) const {
    auto combo = solver.solve(coords);
    if (!combo) return std::nullopt;
    LiePoly out;
    for (std::uint32_t idx : *combo) {
        int pos = add_to_tree.at(idx);
        if (pos < 0) throw internal_inconsistency("solver combination names a dependent candidate");
        out.toggle(trees[pos]);
    }
    return out;
}

std::shared_ptr<const NkContext::Component> NkContext::component(const Exponent& alpha) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = comps_.find(alpha);
        if (it != comps_.end()) return it->second;
    }

    int vars = spec_.K.m();
    if (static_cast<int>(alpha.size()) != vars) throw input_error("multidegree arity mismatch");

    auto comp = std::make_shared<Component>();
    comp->alpha = alpha;
    comp->columns = abasis_.at(alpha);
    if (comp->columns->words.size() > cap_)
        throw resource_limit("component at total degree " + std::to_string(total_degree(alpha)) +
                             " needs " + std::to_string(comp->columns->words.size()) +
                             " columns, over the cap of " + std::to_string(cap_));
    comp->solver = gf2::Solver(comp->columns->words.size());

    if (total_degree(alpha) >= 2) {
        // candidates: a generating-set entry of this exact multidegree, or
        // [entry, basis tree of the complementary component]
        std::vector<std::pair<LieTreePtr, AlgElem>> cands;
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Exponent beta = tree_multidegree(gens_, vars, LieTree::gptw_leaf(int(gi)));
            bool fits = true;
            Exponent rest(vars);
            for (int i = 0; i < vars; ++i) {
                rest[i] = alpha[i] - beta[i];
                if (rest[i] < 0) fits = false;
            }
            if (!fits) continue;
            if (total_degree(rest) == 0) {
                cands.emplace_back(LieTree::gptw_leaf(int(gi)), gen_elems_[gi]);
            } else if (total_degree(rest) >= 2) {
                auto sub = component(rest);
                for (std::size_t bi = 0; bi < sub->trees.size(); ++bi)
                    cands.emplace_back(
                        LieTree::bracket(LieTree::gptw_leaf(int(gi)), sub->trees[bi]),
                        commutator(spec_, gen_elems_[gi], sub->elems[bi]));
            }
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& a, const auto& b) { return tree_compare(a.first, b.first) < 0; });
        for (auto& [tree, elem] : cands) {
            gf2::BitVec v(comp->columns->words.size());
            for (const TraceWord& w : elem.words()) {
                auto it = comp->columns->index.find(w);
                if (it == comp->columns->index.end())
                    throw internal_inconsistency("candidate leaves its multidegree component");
                v.flip(it->second);
            }
            if (comp->solver.add(std::move(v))) {
                comp->add_to_tree.push_back(static_cast<int>(comp->trees.size()));
                comp->trees.push_back(tree);
                comp->elems.push_back(std::move(elem));
            } else {
                comp->add_to_tree.push_back(-1);
            }
        }
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = comps_.try_emplace(alpha, comp);
    return it->second; // keep the first finished build if two raced
}

LiePoly express_in_gptw(NkContext& ctx, const std::vector<int>& letters) {
    if (letters.size() < 2) throw input_error("nested commutator needs at least two letters");
    {
        std::vector<int> sorted = letters;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("rewriting over the generating set requires distinct letters");
    }
    Exponent alpha(ctx.complex().m(), 0);
    for (int v : letters) {
        if (v < 1 || v > ctx.complex().m()) throw input_error("letter outside the vertex range");
        alpha[v - 1] += 1;
    }
    AlgElem target = ctx.eval(nested_tree(letters));
    auto comp = ctx.component(alpha);
    gf2::BitVec coords(comp->columns->words.size());
    for (const TraceWord& w : target.words()) {
        auto it = comp->columns->index.find(w);
        if (it == comp->columns->index.end())
            throw internal_inconsistency("evaluation leaves its multidegree component");
        coords.flip(it->second);
    }
    auto out = comp->express(coords);
    if (!out)
        throw internal_inconsistency(
            "no-repeat nested commutator fell outside the generated subalgebra");
    return *out;
}

std::map<int, long long> NkDims::by_total_degree() const {
    std::map<int, long long> out;
    for (const auto& [a, v] : dims) out[total_degree(a)] += v;
    return out;
}

namespace {

void compositions(int vars, int total, int part_cap, Exponent& cur, int from,
                  std::vector<Exponent>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    if (from >= vars) return;
    for (int v = 0; v <= std::min(total, part_cap); ++v) {
        cur[from] = v;
        compositions(vars, total - v, part_cap, cur, from + 1, out);
    }
    cur[from] = 0;
}

} // namespace

NkDims nk_dims(NkContext& ctx, int D, int threads) {
    if (D < 2) throw input_error("dimension sweep needs D >= 2");
    NkDims out;
    int vars = ctx.complex().m();
    for (int d = 2; d <= D; ++d) {
        std::vector<Exponent> alphas;
        Exponent cur(vars, 0);
        compositions(vars, d, D - 1, cur, 0, alphas); // parts of size >= D are skipped
        std::vector<long long> dims(alphas.size(), 0);

        parallel_for(alphas.size(), threads,
                     [&](std::size_t i) { dims[i] = ctx.component(alphas[i])->trees.size(); });

        for (std::size_t i = 0; i < alphas.size(); ++i)
            if (dims[i] > 0) out.dims[alphas[i]] = dims[i];
    }
    return out;
}

} // namespace racg
