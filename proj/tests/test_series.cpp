#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "racg/errors.hpp"
#include "racg/series.hpp"
#include "test_util.hpp"

using namespace racg;
using testutil::Rng;

namespace {

FlagComplex k2() { return FlagComplex::from_edges(2, {}); }
FlagComplex k3() { return FlagComplex::from_edges(3, {{1, 3}}); }
FlagComplex pentagon() {
    return FlagComplex::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

MultiPoly product_of(const DimTable& dims, int vars, int D) {
    MultiPoly p = MultiPoly::one(vars, D);
    for (const auto& [alpha, n] : dims.n) {
        MultiPoly f = MultiPoly::one(vars, D);
        f.add_term(alpha, -1);
        for (long long i = 0; i < n; ++i) p = p * f;
    }
    return p;
}

DimTable random_dims(Rng& rng, int vars, int D, int entries) {
    DimTable t;
    t.vars = vars;
    for (int e = 0; e < entries; ++e) {
        Exponent a(static_cast<std::size_t>(vars), 0);
        int total = 0;
        for (int i = 0; i < vars; ++i) {
            a[static_cast<std::size_t>(i)] = testutil::uniform(rng, 0, 2);
            total += a[static_cast<std::size_t>(i)];
        }
        if (total < 1 || total > D) continue;
        t.n[a] = testutil::uniform(rng, 1, 3);
    }
    return t;
}

} // namespace

TEST_CASE("multivariate polynomial arithmetic") {
    MultiPoly p(2, 4);
    p.add_term({0, 0}, 1);
    p.add_term({1, 1}, -1);
    MultiPoly q = p * p;
    CHECK(q.coeff({0, 0}) == 1);
    CHECK(q.coeff({1, 1}) == -2);
    CHECK(q.coeff({2, 2}) == 1);
    MultiPoly r = p + p;
    CHECK(r.coeff({0, 0}) == 2);
    CHECK(MultiPoly::one(2, 4).is_one());
    CHECK_FALSE(p.is_one());
    // terms above the truncation are dropped as they arise
    MultiPoly s(1, 2);
    s.add_term({3}, 5);
    CHECK(s.terms().empty());
    CHECK_THROWS_AS(p * MultiPoly::one(2, 5), input_error);
    CHECK_THROWS_AS(p * MultiPoly::one(3, 4), input_error);
}

TEST_CASE("alternating-sum polynomial on the catalog") {
    MultiPoly p2 = rhs_poly(k2());
    CHECK(p2.coeff({0, 0}) == 1);
    CHECK(p2.coeff({1, 1}) == -1);
    CHECK(p2.coeff({1, 0}) == 0);

    std::map<int, mpz_class> s3 = rhs_poly(k3()).single_variable();
    CHECK(s3[0] == 1);
    CHECK(s3[2] == -2);
    CHECK(s3[3] == -1);
    CHECK(s3.count(1) == 0);

    std::map<int, mpz_class> sp = rhs_poly(pentagon()).single_variable();
    CHECK(sp[0] == 1);
    CHECK(sp[2] == -5);
    CHECK(sp[3] == -5);
    CHECK(sp.count(4) == 0);
    CHECK(sp[5] == 1);
}

TEST_CASE("exponent extraction inverts the product") {
    Rng rng(314159);
    for (int t = 0; t < 50; ++t) {
        int vars = testutil::uniform(rng, 1, 3);
        int D = testutil::uniform(rng, 3, 6);
        DimTable dims = random_dims(rng, vars, D, 4);
        MultiPoly P = product_of(dims, vars, D);
        DimTable back = extract_exponents(P, D);
        CHECK(back.n == dims.n);
    }
}

TEST_CASE("exponent extraction rejects bad input") {
    MultiPoly p(1, 3);
    p.add_term({0}, 1);
    p.add_term({2}, 1); // would force a negative exponent
    CHECK_THROWS_AS(extract_exponents(p, 3), identity_violation);

    MultiPoly q(1, 3);
    q.add_term({0}, 2);
    CHECK_THROWS_AS(extract_exponents(q, 3), input_error);
}

TEST_CASE("free Lie dimensions on two degree-1 generators") {
    DimTable t = free_lie_series({{1, 0}, {0, 1}}, 8);
    std::map<int, long long> by = t.by_total_degree();
    CHECK(by[1] == 2);
    CHECK(by[2] == 1);
    CHECK(by[3] == 2);
    CHECK(by[4] == 3);
    CHECK(by[5] == 6);
    CHECK(by[6] == 9);
    CHECK(by[7] == 18);
    CHECK(by[8] == 30);
}

TEST_CASE("free Lie dimensions on three degree-2 generators") {
    DimTable t = free_lie_series({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 6);
    std::map<int, long long> by = t.by_total_degree();
    CHECK(by[2] == 3);
    CHECK(by[4] == 3);
    CHECK(by[6] == 8);
}

TEST_CASE("envelope series inverts the product") {
    Rng rng(2718);
    for (int t = 0; t < 30; ++t) {
        int vars = testutil::uniform(rng, 1, 3);
        int D = testutil::uniform(rng, 3, 6);
        DimTable dims = random_dims(rng, vars, D, 4);
        MultiPoly prod = product_of(dims, vars, D) * pbw_series(dims, D);
        CHECK(prod.is_one());
    }
}

TEST_CASE("envelope of the extracted exponents reproduces the alternating sum") {
    for (const FlagComplex& K : {k2(), k3(), pentagon()}) {
        int D = 6;
        MultiPoly rhs = rhs_poly(K).with_trunc(D);
        DimTable dims = extract_exponents(rhs, D);
        CHECK((rhs * pbw_series(dims, D)).is_one());
    }
}

TEST_CASE("dimension table totals") {
    DimTable t;
    t.vars = 2;
    t.n[{1, 1}] = 1;
    t.n[{2, 1}] = 2;
    t.n[{1, 2}] = 1;
    CHECK(t.at({1, 1}) == 1);
    CHECK(t.at({0, 1}) == 0);
    std::map<int, long long> by = t.by_total_degree();
    CHECK(by[2] == 1);
    CHECK(by[3] == 3);
}
