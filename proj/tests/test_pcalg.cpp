#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "racg/errors.hpp"
#include "racg/pcalg.hpp"
#include "test_util.hpp"

using namespace racg;
using testutil::Rng;
using testutil::word_of;

namespace {

FlagComplex pentagon() {
    return FlagComplex::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

// Oracle: the full commutation class of w by breadth-first adjacent swaps.
// Returns nullopt when square_zero holds and some spelling has an adjacent
// equal pair; otherwise the lexicographically least member.
std::optional<TraceWord> normal_form_oracle(const AlgebraSpec& spec, const TraceWord& w) {
    std::set<TraceWord> seen{w};
    std::queue<TraceWord> todo;
    todo.push(w);
    while (!todo.empty()) {
        TraceWord cur = todo.front();
        todo.pop();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) {
                if (spec.square_zero) return std::nullopt;
                continue;
            }
            if (!spec.commute(cur[i], cur[i + 1])) continue;
            TraceWord next = cur;
            std::swap(next[i], next[i + 1]);
            if (seen.insert(next).second) todo.push(next);
        }
    }
    return *seen.begin();
}

} // namespace

TEST_CASE("normal form inserts into the whole commuting suffix") {
    // letter 3 commutes with both 4 and 2, which do not commute with each
    // other; lex-least placement jumps past the smaller letter 2
    AlgebraSpec spec{pentagon(), false};
    CHECK(normal_form(spec, word_of({4, 2, 3})) == word_of({3, 4, 2}));
    CHECK(normal_form(spec, word_of({4, 2})) == word_of({4, 2}));
    CHECK(normal_form(spec, word_of({2, 1})) == word_of({1, 2}));
    CHECK(normal_form(spec, word_of({})) == word_of({}));
}

TEST_CASE("square-zero kills a square reachable through commuting letters") {
    AlgebraSpec spec{pentagon(), true};
    CHECK(normal_form(spec, word_of({1, 2, 1})) == std::nullopt); // 1 and 2 commute
    CHECK(normal_form(spec, word_of({1, 3, 1})) == word_of({1, 3, 1})); // 1 and 3 do not
    AlgebraSpec plain{pentagon(), false};
    CHECK(normal_form(plain, word_of({1, 2, 1})) == word_of({1, 1, 2}));
}

TEST_CASE("normal form matches the swap-class oracle") {
    Rng rng(555);
    for (int t = 0; t < 400; ++t) {
        FlagComplex K = testutil::random_complex(rng, 5);
        AlgebraSpec spec{K, t % 2 == 0};
        TraceWord w = word_of(testutil::random_letters(rng, K.m(), testutil::uniform(rng, 0, 7)));
        CHECK(normal_form(spec, w) == normal_form_oracle(spec, w));
    }
}

TEST_CASE("normal form is idempotent and append-consistent") {
    Rng rng(556);
    for (int t = 0; t < 300; ++t) {
        FlagComplex K = testutil::random_complex(rng, 5);
        AlgebraSpec spec{K, t % 2 == 1};
        TraceWord a = word_of(testutil::random_letters(rng, K.m(), testutil::uniform(rng, 0, 5)));
        TraceWord b = word_of(testutil::random_letters(rng, K.m(), testutil::uniform(rng, 0, 5)));
        auto na = normal_form(spec, a);
        if (!na) continue;
        CHECK(normal_form(spec, *na) == na);
        // appending through the canonical prefix agrees with one-shot
        CHECK(normal_form_append(spec, *na, b) == normal_form(spec, a + b));
    }
}

TEST_CASE("element arithmetic and parts") {
    AlgElem e;
    e.toggle(word_of({1, 2}));
    e.toggle(word_of({1}));
    AlgElem f;
    f.toggle(word_of({1, 2}));
    AlgElem sum = e + f; // the common word cancels
    CHECK(sum.words() == std::set<TraceWord>{word_of({1})});
    CHECK(sum.min_degree() == 1);
    CHECK(sum.degree_part(1) == sum);
    CHECK(sum.degree_part(2).is_zero());
    CHECK(e.multidegree_part({1, 1}).words() == std::set<TraceWord>{word_of({1, 2})});
    CHECK(AlgElem().is_zero());
    CHECK(AlgElem().min_degree() == -1);

    AlgElem t4(4), t5(5);
    CHECK_THROWS_AS(t4 += t5, input_error);
    AlgElem open;
    open += t4; // untruncated absorbs the truncation
    CHECK(open.trunc() == 4);
}

TEST_CASE("multiplication is associative and distributive") {
    Rng rng(808);
    for (int t = 0; t < 500; ++t) {
        FlagComplex K = testutil::random_complex(rng, 5);
        AlgebraSpec spec{K, t % 2 == 0};
        AlgElem a = testutil::random_elem(rng, spec, 3, 3);
        AlgElem b = testutil::random_elem(rng, spec, 3, 3);
        AlgElem c = testutil::random_elem(rng, spec, 3, 3);
        CHECK(multiply(spec, multiply(spec, a, b), c) == multiply(spec, a, multiply(spec, b, c)));
        CHECK(multiply(spec, a, b + c) == multiply(spec, a, b) + multiply(spec, a, c));
        CHECK(multiply(spec, AlgElem::unit(), a) == a);
        CHECK(multiply(spec, a, AlgElem::unit()) == a);
    }
}

TEST_CASE("truncated products drop exactly the long words") {
    Rng rng(809);
    for (int t = 0; t < 200; ++t) {
        FlagComplex K = testutil::random_complex(rng, 5);
        AlgebraSpec spec{K, t % 2 == 0};
        int trunc = testutil::uniform(rng, 1, 5);
        AlgElem a = testutil::random_elem(rng, spec, 3, 3);
        AlgElem b = testutil::random_elem(rng, spec, 3, 3);
        AlgElem at(trunc), bt(trunc), ua, ub;
        for (const auto& w : a.words())
            if (static_cast<int>(w.size()) <= trunc) {
                at.toggle(w);
                ua.toggle(w);
            }
        for (const auto& w : b.words())
            if (static_cast<int>(w.size()) <= trunc) {
                bt.toggle(w);
                ub.toggle(w);
            }
        AlgElem full = multiply(spec, ua, ub);
        AlgElem cut = multiply(spec, at, bt);
        CHECK(cut.trunc() == trunc);
        AlgElem expect(trunc);
        for (const auto& w : full.words())
            if (static_cast<int>(w.size()) <= trunc) expect.toggle(w);
        CHECK(cut == expect);
    }
}

TEST_CASE("commutator identities") {
    Rng rng(810);
    for (int t = 0; t < 300; ++t) {
        FlagComplex K = testutil::random_complex(rng, 5);
        AlgebraSpec spec{K, t % 2 == 0};
        AlgElem a = testutil::random_elem(rng, spec, 2, 3);
        AlgElem b = testutil::random_elem(rng, spec, 2, 3);
        AlgElem c = testutil::random_elem(rng, spec, 2, 3);
        CHECK(commutator(spec, a, a).is_zero());
        CHECK(commutator(spec, a, b) == commutator(spec, b, a));
        AlgElem jac = commutator(spec, commutator(spec, a, b), c);
        jac += commutator(spec, commutator(spec, b, c), a);
        jac += commutator(spec, commutator(spec, c, a), b);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("edge generators commute, non-edge generators do not") {
    FlagComplex K = pentagon();
    AlgebraSpec spec{K, false};
    CHECK(commutator(spec, AlgElem::generator(1), AlgElem::generator(2)).is_zero());
    CHECK_FALSE(commutator(spec, AlgElem::generator(1), AlgElem::generator(3)).is_zero());
}

TEST_CASE("multidegree basis enumerates every canonical word") {
    Rng rng(811);
    for (int t = 0; t < 150; ++t) {
        FlagComplex K = testutil::random_complex(rng, 4);
        AlgebraSpec spec{K, t % 2 == 0};
        Exponent alpha(static_cast<std::size_t>(K.m()), 0);
        int total = 0;
        for (int i = 0; i < K.m() && total < 6; ++i) {
            alpha[static_cast<std::size_t>(i)] = testutil::uniform(rng, 0, 2);
            total += alpha[static_cast<std::size_t>(i)];
        }
        // oracle: normalize every distinct arrangement of the multiset
        std::vector<int> letters;
        for (int i = 0; i < K.m(); ++i)
            for (int c = 0; c < alpha[static_cast<std::size_t>(i)]; ++c) letters.push_back(i + 1);
        std::sort(letters.begin(), letters.end());
        std::set<TraceWord> expect;
        do {
            if (auto nf = normal_form(spec, word_of(letters))) expect.insert(*nf);
        } while (std::next_permutation(letters.begin(), letters.end()));

        std::vector<TraceWord> basis = multidegree_basis(spec, alpha);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        CHECK(std::set<TraceWord>(basis.begin(), basis.end()) == expect);
        CHECK(basis.size() == expect.size());
    }
}

TEST_CASE("basis cache coordinates round-trip") {
    FlagComplex K = pentagon();
    AlgebraSpec spec{K, false};
    BasisCache cache(spec);
    Exponent alpha{1, 1, 1, 0, 0};
    auto basis = cache.at(alpha);
    REQUIRE(basis->words.size() >= 2);
    AlgElem e;
    e.toggle(basis->words[0]);
    e.toggle(basis->words[1]);
    gf2::BitVec v = cache.coords(e, alpha);
    CHECK(v.test(0));
    CHECK(v.test(1));
    CHECK(v.count() == 2);

    AlgElem bad;
    bad.toggle(word_of({1}));
    CHECK_THROWS_AS(cache.coords(bad, alpha), internal_inconsistency);
}
