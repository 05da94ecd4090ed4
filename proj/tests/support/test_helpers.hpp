// Shared test utilities: deterministic random generators for field elements,
// polynomials and admissible systems, plus independent oracles (subresultant
// gcd) kept apart from the library code paths they check.
#pragma once

#include <vector>

#include "abcpoly/polyops.hpp"
#include "abcpoly/prng.hpp"
#include "abcpoly/sumsystem.hpp"

namespace abcpoly::testing {

inline Rational random_rational(Prng& rng, long lo = -3, long hi = 3) {
    return Rational(rng.uniform(lo, hi));
}

inline CycNumber random_cyc(Prng& rng, const CycFieldPtr& field, long lo = -3,
                            long hi = 3) {
    std::vector<Rational> c(field->degree());
    for (auto& x : c) x = random_rational(rng, lo, hi);
    return CycNumber::from_coeffs(field, std::move(c));
}

inline CycNumber random_cyc_nonzero(Prng& rng, const CycFieldPtr& field,
                                    long lo = -3, long hi = 3) {
    while (true) {
        CycNumber c = random_cyc(rng, field, lo, hi);
        if (!c.is_zero()) return c;
    }
}

inline Polynomial random_univariate(Prng& rng, const Context& ctx, unsigned var,
                                    long max_deg, long lo = -3, long hi = 3) {
    long deg = rng.uniform(0, max_deg);
    Polynomial p = Polynomial::zero(ctx);
    for (long e = 0; e <= deg; ++e) {
        long c = rng.uniform(lo, hi);
        if (e == deg && c == 0) c = 1;
        if (c != 0) {
            p += Polynomial::term(
                ctx, e == 0 ? Monomial() : Monomial::variable(var, static_cast<unsigned>(e)),
                CycNumber::from_integer(ctx.field, c));
        }
    }
    return p;
}

inline Polynomial random_multivariate(Prng& rng, const Context& ctx,
                                      long max_deg, long terms, long lo = -3,
                                      long hi = 3) {
    Polynomial p = Polynomial::zero(ctx);
    for (long t = 0; t < terms; ++t) {
        std::vector<unsigned> exps(ctx.var_count(), 0);
        long budget = rng.uniform(0, max_deg);
        for (long b = 0; b < budget; ++b) {
            exps[static_cast<size_t>(rng.uniform(0, static_cast<long>(ctx.var_count()) - 1))] += 1;
        }
        long c = rng.uniform(lo, hi);
        if (c != 0) {
            p += Polynomial::term(ctx, Monomial(std::move(exps)),
                                  CycNumber::from_integer(ctx.field, c));
        }
    }
    return p;
}

// A vanishing sum meeting the hypotheses of the univariate main theorem:
// nonzero members, gcd 1, no vanishing proper subsum, not all constant.
inline VanishingSum random_admissible_univariate(Prng& rng, const Context& ctx,
                                                 size_t n, long max_deg) {
    while (true) {
        std::vector<Polynomial> fs;
        Polynomial total = Polynomial::zero(ctx);
        for (size_t i = 0; i + 1 < n; ++i) {
            Polynomial f = random_univariate(rng, ctx, 0, max_deg);
            if (f.is_zero()) f = Polynomial::constant(ctx, 1L);
            total += f;
            fs.push_back(std::move(f));
        }
        if (total.is_zero()) continue;
        fs.push_back(-total);
        VanishingSum sum = VanishingSum::build(fs);
        if (sum.all_constant()) continue;
        if (!gcd_many(fs).is_constant()) continue;
        if (!vanishing_subsums(sum).empty()) continue;
        return sum;
    }
}

// A multivariate analogue for the reduction tests.
inline VanishingSum random_admissible_multivariate(Prng& rng, const Context& ctx,
                                                   size_t n, long max_deg) {
    while (true) {
        std::vector<Polynomial> fs;
        Polynomial total = Polynomial::zero(ctx);
        for (size_t i = 0; i + 1 < n; ++i) {
            Polynomial f = random_multivariate(rng, ctx, max_deg, 4);
            if (f.is_zero()) continue;
            total += f;
            fs.push_back(std::move(f));
        }
        if (fs.size() + 1 != n || total.is_zero()) continue;
        fs.push_back(-total);
        VanishingSum sum = VanishingSum::build(fs);
        if (sum.all_constant() || sum.univariate()) continue;
        if (!gcd_many(fs).is_constant()) continue;
        if (!vanishing_subsums(sum).empty()) continue;
        return sum;
    }
}

// Lists with deliberately shared factors for valuation-style properties.
inline std::vector<Polynomial> random_factored_list(Prng& rng, const Context& ctx,
                                                    size_t n) {
    Polynomial x = Polynomial::variable(ctx, 0);
    std::vector<Polynomial> pool{
        x,
        x + Polynomial::constant(ctx, 1L),
        x - Polynomial::constant(ctx, 1L),
        x * x + Polynomial::constant(ctx, 1L),
        x + Polynomial::constant(ctx, 2L),
    };
    std::vector<Polynomial> fs;
    for (size_t i = 0; i < n; ++i) {
        Polynomial f = Polynomial::constant(
            ctx, CycNumber::from_integer(ctx.field, rng.uniform(1, 3)));
        for (const auto& b : pool) {
            long e = rng.uniform(0, 2);
            if (e > 0) f = f * b.pow(static_cast<unsigned>(e));
        }
        fs.push_back(std::move(f));
    }
    return fs;
}

// Independent gcd route for univariate inputs: the subresultant pseudo
// remainder sequence with the classical g/h scaling.
inline Polynomial gcd_subresultant(const Polynomial& a_in, const Polynomial& b_in,
                                   unsigned var) {
    const Context& ctx = a_in.context();
    auto deg = [&](const Polynomial& p) { return p.degree_in(var); };
    auto lc = [&](const Polynomial& p) {
        // coefficient of the highest power of var
        long d = deg(p);
        CycNumber c = CycNumber::zero(ctx.field);
        for (const auto& [m, coeff] : p.terms()) {
            if (static_cast<long>(m.exponent(var)) == d) c += coeff;
        }
        return c;
    };
    Polynomial a = a_in, b = b_in;
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (deg(a) < deg(b)) std::swap(a, b);
    CycNumber g = CycNumber::one(ctx.field);
    CycNumber h = CycNumber::one(ctx.field);
    while (true) {
        long delta = deg(a) - deg(b);
        // pseudo remainder of a by b (a scaled by powers of lc(b))
        Polynomial r = a;
        CycNumber lb = lc(b);
        while (!r.is_zero() && deg(r) >= deg(b)) {
            long shift = deg(r) - deg(b);
            CycNumber lr = lc(r);
            r = r.scale(lb) -
                b * Polynomial::term(
                        ctx, Monomial::variable(var, static_cast<unsigned>(shift)),
                        lr);
        }
        if (r.is_zero()) return normalize_unit(b);
        if (deg(r) == 0) return Polynomial::constant(ctx, 1L);
        CycNumber divisor = g * h.pow(delta);
        a = b;
        b = r.scale(divisor.inverse());
        g = lc(a);
        h = delta == 0 ? h : (g.pow(delta) * h.pow(1 - delta));
    }
}

}  // namespace abcpoly::testing
