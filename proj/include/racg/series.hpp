#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "racg/complexes.hpp"

namespace racg {

// Exponent vector over the polynomial variables (one variable per vertex).
using Exponent = std::vector<int>;

int total_degree(const Exponent& a);

// Multivariate polynomial with exact arbitrary-precision integer coefficients,
// truncated at a fixed total degree: terms beyond the truncation are dropped as
// they arise.  Operations require operands over the same variables and the same
// truncation degree.
class MultiPoly {
public:
    static constexpr int kDefaultTrunc = 8;

    MultiPoly(int vars, int trunc);
    static MultiPoly one(int vars, int trunc);

    int vars() const { return vars_; }
    int trunc() const { return trunc_; }

    const std::map<Exponent, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(const Exponent& a) const;
    void add_term(const Exponent& a, const mpz_class& c); // accumulates, drops truncated terms

    // Lossless only when no dropped information matters; used to move an exact
    // polynomial to the truncation degree a computation runs at.
    MultiPoly with_trunc(int trunc) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const = default;

    bool is_one() const;
    std::map<int, mpz_class> single_variable() const; // image under every variable -> x

private:
    int vars_;
    int trunc_;
    std::map<Exponent, mpz_class> terms_; // zero coefficients never stored

    void check_compatible(const MultiPoly& o) const;
};

// Multidegrees with their extracted exponents; zero entries are omitted.
struct DimTable {
    int vars = 0;
    std::map<Exponent, long long> n;

    long long at(const Exponent& a) const;
    std::map<int, long long> by_total_degree() const; // k -> sum of n over |alpha| = k
};

// Sum over all vertex subsets J of euler_term(K, J) * lambda^J -- an exact
// polynomial (square-free exponents, constant term 1) over m variables.
MultiPoly rhs_poly(const FlagComplex& K);

// Finds the exponents n_alpha with  prod_alpha (1 - lambda^alpha)^(n_alpha) == P
// up to total degree D, working upward one total degree at a time (read the
// degree-d coefficients, negate, then divide the running product out).  Throws
// identity_violation naming the offending multidegree if an exponent would have
// to be negative; throws input_error if the constant term is not 1.
DimTable extract_exponents(const MultiPoly& P, int D);

// Exponent extraction for a free Lie algebra on generators of the given
// multidegrees:  extract_exponents(1 - sum_g lambda^deg(g), D).
DimTable free_lie_series(const std::vector<Exponent>& generator_degrees, int D);

// prod_alpha (1 - lambda^alpha)^(-n_alpha) truncated at total degree D: the
// additive Poincare series of the universal envelope under PBW.
MultiPoly pbw_series(const DimTable& dims, int D);

} // namespace racg
