#include "racg/series.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "racg/errors.hpp"

namespace racg {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

namespace {

std::string exponent_str(const Exponent& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

} // namespace

MultiPoly::MultiPoly(int vars, int trunc) : vars_(vars), trunc_(trunc) {
    if (vars < 0 || trunc < 0) throw input_error("polynomial needs vars >= 0 and trunc >= 0");
}

MultiPoly MultiPoly::one(int vars, int trunc) {
    MultiPoly p(vars, trunc);
    p.add_term(Exponent(vars, 0), 1);
    return p;
}

mpz_class MultiPoly::coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiPoly::add_term(const Exponent& a, const mpz_class& c) {
    if (static_cast<int>(a.size()) != vars_) throw input_error("exponent arity mismatch");
    if (c == 0 || total_degree(a) > trunc_) return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::with_trunc(int trunc) const {
    MultiPoly out(vars_, trunc);
    for (const auto& [a, c] : terms_) out.add_term(a, c);
    return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw input_error("polynomials over different variable counts");
    if (trunc_ != o.trunc_)
        throw input_error("mixing truncation degrees " + std::to_string(trunc_) + " and " +
                          std::to_string(o.trunc_));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out = *this;
    for (const auto& [a, c] : o.terms_) out.add_term(a, c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out(vars_, trunc_);
    Exponent sum(vars_);
    for (const auto& [a, ca] : terms_) {
        int da = total_degree(a);
        for (const auto& [b, cb] : o.terms_) {
            if (da + total_degree(b) > trunc_) continue;
            for (int i = 0; i < vars_; ++i) sum[i] = a[i] + b[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           total_degree(terms_.begin()->first) == 0;
}

std::map<int, mpz_class> MultiPoly::single_variable() const {
    std::map<int, mpz_class> out;
    for (const auto& [a, c] : terms_) {
        auto [it, fresh] = out.try_emplace(total_degree(a), c);
        if (!fresh) it->second += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

long long DimTable::at(const Exponent& a) const {
    auto it = n.find(a);
    return it == n.end() ? 0 : it->second;
}

std::map<int, long long> DimTable::by_total_degree() const {
    std::map<int, long long> out;
    for (const auto& [a, v] : n) out[total_degree(a)] += v;
    return out;
}

MultiPoly rhs_poly(const FlagComplex& K) {
    int m = K.m();
    MultiPoly P(m, m);
    for (VertexSet J = 0, all = full_vertex_set(m);; ++J) {
        long long c = euler_term(K, J);
        if (c != 0) {
            Exponent a(m, 0);
            for (int v : vertices_of(J)) a[v - 1] = 1;
            P.add_term(a, mpz_class(static_cast<long>(c)));
        }
        if (J == all) break;
    }
    return P;
}

namespace {

// 1 / (1 - lambda^alpha)^n truncated: sum_k binom(n+k-1, k) lambda^(k*alpha)
MultiPoly inverse_power(const Exponent& alpha, long long n, int vars, int trunc) {
    if (n == 0) return MultiPoly::one(vars, trunc);
    MultiPoly out(vars, trunc);
    int d = total_degree(alpha);
    Exponent a(vars, 0);
    for (int k = 0; k * d <= trunc; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
                     static_cast<unsigned long>(k));
        out.add_term(a, binom);
        for (int i = 0; i < vars; ++i) a[i] += alpha[i];
    }
    return out;
}

} // namespace

DimTable extract_exponents(const MultiPoly& P, int D) {
    if (P.coeff(Exponent(P.vars(), 0)) != 1)
        throw input_error("exponent extraction needs constant term 1");
    MultiPoly R = P.with_trunc(D);
    DimTable table;
    table.vars = P.vars();
    for (int d = 1; d <= D; ++d) {
        // snapshot this degree's coefficients before dividing anything out
        std::vector<std::pair<Exponent, long long>> found;
        for (const auto& [a, c] : R.terms()) {
            if (total_degree(a) != d) continue;
            mpz_class n = -c;
            if (n < 0)
                throw identity_violation("extracted exponent at multidegree " + exponent_str(a) +
                                         " is negative (" + mpz_class(c).get_str() +
                                         " before negation): series identity violated");
            if (!n.fits_slong_p())
                throw resource_limit("extracted exponent at " + exponent_str(a) +
                                     " does not fit a machine integer");
            found.emplace_back(a, n.get_si());
        }
        for (const auto& [a, n] : found) {
            if (n == 0) continue;
            table.n[a] = n;
            R = R * inverse_power(a, n, R.vars(), D);
        }
    }
    return table;
}

DimTable free_lie_series(const std::vector<Exponent>& generator_degrees, int D) {
    if (generator_degrees.empty()) throw input_error("no generator degrees given");
    int vars = static_cast<int>(generator_degrees.front().size());
    MultiPoly P = MultiPoly::one(vars, D);
    for (const Exponent& a : generator_degrees) {
        if (static_cast<int>(a.size()) != vars) throw input_error("generator degree arity mismatch");
        P.add_term(a, -1);
    }
    return extract_exponents(P, D);
}

MultiPoly pbw_series(const DimTable& dims, int D) {
    MultiPoly out = MultiPoly::one(dims.vars, D);
    for (const auto& [a, n] : dims.n) {
        if (n < 0) throw input_error("negative dimension in table");
        if (n == 0 || total_degree(a) > D) continue;
        out = out * inverse_power(a, n, dims.vars, D);
    }
    return out;
}

} // namespace racg
