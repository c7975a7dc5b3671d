#pragma once

#include "bdgalois/radical.hpp"
#include "bdgalois/rational_function.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bdgalois {

// Truncated Laurent expansion of a rational function about a finite point or
// about infinity. About a finite c, coeffs[i] multiplies (x-c)^(min_exp+i).
// About infinity the expansion variable is 1/x: coeffs[i] multiplies
// x^-(min_exp+i), so increasing index walks down in powers of x.
template <class F>
struct LaurentExpansion {
    bool at_infinity = false;
    F center{};
    long min_exp = 0;
    std::vector<F> coeffs;
    int terms_requested = 0;

    const F& coefficient(long e) const {
        static const F zero{};
        long i = e - min_exp;
        if (i < 0 || i >= static_cast<long>(coeffs.size())) return zero;
        return coeffs[static_cast<std::size_t>(i)];
    }
    const F& leading() const {
        if (coeffs.empty()) throw std::domain_error("empty expansion");
        return coeffs.front();
    }
    // Coefficient of (x-c)^-1; only meaningful about a finite point.
    const F& residue() const { return coefficient(-1); }
};

// First n terms of A(u)/B(u) as a power series; requires B(0) != 0.
template <class F>
std::vector<F> series_divide(const Polynomial<F>& a, const Polynomial<F>& b, int n) {
    if (b.coeff(0).is_zero()) throw std::domain_error("series division by u-divisible series");
    std::vector<F> out(static_cast<std::size_t>(n));
    F b0_inv = F(1) / b.coeff(0);
    for (int k = 0; k < n; ++k) {
        F acc = a.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= b.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * b0_inv;
    }
    return out;
}

template <class F>
LaurentExpansion<F> laurent_at(const RationalFunction<F>& r, const F& c, int n_terms) {
    if (n_terms <= 0) throw std::invalid_argument("empty expansion");
    if (r.is_zero()) throw std::domain_error("expansion of zero function");
    Polynomial<F> n = r.num().shifted(c);
    Polynomial<F> d = r.den().shifted(c);
    int nz = 0, dz = 0;
    while (n.coeff(nz).is_zero()) ++nz;
    while (d.coeff(dz).is_zero()) ++dz;
    std::vector<F> nc(n.coeffs().begin() + nz, n.coeffs().end());
    std::vector<F> dc(d.coeffs().begin() + dz, d.coeffs().end());
    LaurentExpansion<F> out;
    out.center = c;
    out.min_exp = nz - dz;
    out.terms_requested = n_terms;
    out.coeffs = series_divide(Polynomial<F>(std::move(nc)), Polynomial<F>(std::move(dc)),
                               n_terms);
    return out;
}

template <class F>
LaurentExpansion<F> laurent_at_infinity(const RationalFunction<F>& r, int n_terms) {
    if (n_terms <= 0) throw std::invalid_argument("empty expansion");
    if (r.is_zero()) throw std::domain_error("expansion of zero function");
    LaurentExpansion<F> out;
    out.at_infinity = true;
    out.min_exp = r.order_at_infinity();
    out.terms_requested = n_terms;
    out.coeffs = series_divide(r.num().reversed(), r.den().reversed(), n_terms);
    return out;
}

// Finite poles of r with multiplicities, sorted by location. Requires the
// denominator to split into linear factors over Q; anything else raises
// "unsupported pole field" naming the offending factor.
std::vector<std::pair<Rational, int>> finite_poles(const RationalFunction<Rational>& r);

// Multiplicity of c as a pole of r (0 when ordinary).
template <class F>
int pole_order_at(const RationalFunction<F>& r, const F& c) {
    Polynomial<F> d = r.den();
    Polynomial<F> lin(std::vector<F>{-c, F(1)});
    int m = 0;
    while (!d.is_zero()) {
        auto [q, rem] = d.divmod(lin);
        if (!rem.is_zero()) break;
        ++m;
        d = q;
    }
    return m;
}

// Truncated square-root branch [sqrt r]_c used by the order-2v subcases.
// About a finite c the branch runs over (x-c)^-v .. (x-c)^-2; about infinity
// it is a polynomial a*x^v + ... + d. `b` is the next coefficient of
// r - branch^2 (of (x-c)^-(v+1), resp. x^(v-1)).
struct SqrtBranch {
    bool at_infinity = false;
    Rational center{};
    int v = 0;
    // Finite: coeffs[i] multiplies (x-c)^-(v-i), i = 0..v-2.
    // Infinity: coeffs[i] multiplies x^(v-i), i = 0..v.
    std::vector<RadicalNumber> coeffs;
    RadicalNumber b;

    RadicalNumber leading() const { return coeffs.empty() ? RadicalNumber() : coeffs.front(); }
    RationalFunction<RadicalNumber> as_rational_function() const;
    // Antiderivative (no constant term): finite branches integrate to simple
    // rational terms, the branch at infinity to a polynomial.
    RationalFunction<RadicalNumber> antiderivative() const;
    SqrtBranch negated() const;
};

SqrtBranch sqrt_branch(const RationalFunction<Rational>& r, const Rational& c, int half_order);
SqrtBranch sqrt_branch_at_infinity(const RationalFunction<Rational>& r, int half_order);

// Partial-fraction decomposition with poles known in advance (locations must
// be exactly the finite poles of r).
template <class F>
struct PartialFractions {
    Polynomial<F> poly_part;
    // Per pole: (location, coefficients of (x-c)^-1, (x-c)^-2, ... up to order).
    std::vector<std::pair<Rational, std::vector<F>>> poles;
};

template <class F>
PartialFractions<F> partial_fractions(const RationalFunction<F>& r,
                                      const std::vector<std::pair<Rational, int>>& poles) {
    PartialFractions<F> out;
    out.poly_part = r.num() / r.den();
    for (const auto& [c, m] : poles) {
        LaurentExpansion<F> exp = laurent_at(r, F(c), m);
        std::vector<F> coeffs(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) coeffs[static_cast<std::size_t>(k - 1)] = exp.coefficient(-k);
        out.poles.emplace_back(c, std::move(coeffs));
    }
    return out;
}

}  // namespace bdgalois
