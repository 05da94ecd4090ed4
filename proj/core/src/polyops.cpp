#include "abcpoly/polyops.hpp"

#include <algorithm>
#include <map>

namespace abcpoly {

Polynomial normalize_unit(const Polynomial& f) {
    if (f.is_zero()) return f;
    const CycNumber& lc = f.leading_coefficient();
    if (lc.is_one()) return f;
    return f.scale(lc.inverse());
}

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw division_by_zero("division by the zero polynomial");
    const Context& ctx = a.context();
    if (!ctx.compatible_with(b.context())) {
        throw incompatible_context("division across contexts");
    }
    if (a.is_zero()) return Polynomial::zero(ctx);
    if (b.is_constant()) {
        return a.scale(b.constant_value().inverse());
    }
    Polynomial::TermMap qterms;
    Polynomial r = a;
    const Monomial& lmb = b.leading_monomial();
    const CycNumber lcb_inv = b.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!lmb.divides(lmr)) return std::nullopt;
        Monomial qm = lmb.quotient_of(lmr);
        CycNumber qc = r.leading_coefficient() * lcb_inv;
        qterms.emplace(qm, qc);
        r -= Polynomial::term(ctx, qm, qc) * b;
    }
    return Polynomial::from_terms(ctx, std::move(qterms));
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw not_a_factor("polynomial division left a remainder");
    return *q;
}

bool divides(const Polynomial& b, const Polynomial& a) {
    return try_exact_div(a, b).has_value();
}

namespace {

// View of f as a univariate polynomial in `var` with polynomial coefficients
// (which do not involve `var`). Ascending by exponent.
std::vector<Polynomial> coefficients_in(const Polynomial& f, unsigned var) {
    const Context& ctx = f.context();
    long d = f.degree_in(var);
    std::vector<Polynomial> out(static_cast<size_t>(std::max<long>(d, -1) + 1),
                                Polynomial::zero(ctx));
    for (const auto& [m, c] : f.terms()) {
        unsigned e = m.exponent(var);
        std::vector<unsigned> rest = m.exponents();
        if (var < rest.size()) rest[var] = 0;
        out[e] += Polynomial::term(ctx, Monomial(std::move(rest)), c);
    }
    return out;
}

Polynomial assemble_in(const Context& ctx, unsigned var,
                       const std::vector<Polynomial>& coeffs) {
    Polynomial acc = Polynomial::zero(ctx);
    for (size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        acc += coeffs[e] * Polynomial::variable(ctx, var, static_cast<unsigned>(e));
    }
    return acc;
}

unsigned lowest_variable(const Polynomial& a, const Polynomial& b) {
    auto va = a.variables_used();
    auto vb = b.variables_used();
    unsigned best = UINT32_MAX;
    if (!va.empty()) best = std::min(best, va.front());
    if (!vb.empty()) best = std::min(best, vb.front());
    return best;
}

struct UniView {
    std::vector<Polynomial> coeffs;  // ascending in the main variable
    long deg() const { return static_cast<long>(coeffs.size()) - 1; }
    const Polynomial& lead() const { return coeffs.back(); }
};

UniView view_of(const Polynomial& f, unsigned var) {
    UniView v{coefficients_in(f, var)};
    while (!v.coeffs.empty() && v.coeffs.back().is_zero()) v.coeffs.pop_back();
    return v;
}

bool view_zero(const UniView& v) { return v.coeffs.empty(); }

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, classical loop.
UniView pseudo_rem(UniView a, const UniView& b) {
    long db = b.deg();
    while (!view_zero(a) && a.deg() >= db) {
        long shift = a.deg() - db;
        Polynomial lead_a = a.lead();
        // a := lc(b)*a - lead_a * x^shift * b
        for (auto& c : a.coeffs) c = c * b.lead();
        for (long i = 0; i <= db; ++i) {
            a.coeffs[static_cast<size_t>(shift + i)] -= lead_a * b.coeffs[static_cast<size_t>(i)];
        }
        while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
    }
    return a;
}

Polynomial content_of(const std::vector<Polynomial>& coeffs);

// Primitive part and content with respect to the view's variable.
std::pair<UniView, Polynomial> primitive_split(UniView v) {
    Polynomial cont = content_of(v.coeffs);
    for (auto& c : v.coeffs) {
        if (!c.is_zero()) c = exact_div(c, cont);
    }
    return {std::move(v), cont};
}

Polynomial content_of(const std::vector<Polynomial>& coeffs) {
    Polynomial acc = Polynomial::zero(coeffs.front().context());
    bool seen = false;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        acc = seen ? gcd(acc, c) : normalize_unit(c);
        seen = true;
        if (acc.is_constant()) break;
    }
    return seen ? acc : acc;
}

}  // namespace

namespace {

// Plain monic Euclid for the one-variable case: field coefficients make every
// division exact, and per-step normalization avoids the growth of scaled
// remainder sequences.
Polynomial gcd_univariate(Polynomial a, Polynomial b, unsigned var) {
    const Context& ctx = a.context();
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return Polynomial::constant(ctx, 1L);
        b = normalize_unit(b);
        Polynomial r = a;
        long db = b.degree_in(var);
        while (!r.is_zero() && r.degree_in(var) >= db) {
            long shift = r.degree_in(var) - db;
            const CycNumber& lr = r.leading_coefficient();
            r -= b * Polynomial::term(
                         ctx, Monomial::variable(var, static_cast<unsigned>(shift)),
                         lr);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return normalize_unit(a);
}

bool single_common_variable(const Polynomial& a, const Polynomial& b,
                            unsigned& var) {
    auto va = a.variables_used();
    auto vb = b.variables_used();
    if (va.size() > 1 || vb.size() > 1) return false;
    if (va.empty() && vb.empty()) return false;
    unsigned v = va.empty() ? vb.front() : va.front();
    if (!va.empty() && !vb.empty() && va.front() != vb.front()) return false;
    var = v;
    return true;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (!a.context().compatible_with(b.context())) {
        throw incompatible_context("gcd across contexts");
    }
    if (a.is_zero() && b.is_zero()) throw undefined_gcd();
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (a.is_constant() || b.is_constant()) {
        return Polynomial::constant(a.context(), 1L);
    }
    if (unsigned uni_var = 0; single_common_variable(a, b, uni_var)) {
        return gcd_univariate(a, b, uni_var);
    }
    unsigned var = lowest_variable(a, b);
    auto [pa, ca] = primitive_split(view_of(a, var));
    auto [pb, cb] = primitive_split(view_of(b, var));
    Polynomial cont = gcd(ca, cb);
    if (pa.deg() < pb.deg()) std::swap(pa, pb);
    // Primitive PRS.
    while (true) {
        if (pb.deg() == 0) {
            // Primitive of degree zero in var: coprime to pa up to content.
            return normalize_unit(cont);
        }
        UniView r = pseudo_rem(pa, pb);
        if (view_zero(r)) {
            Polynomial g = assemble_in(a.context(), var, primitive_split(std::move(pb)).first.coeffs);
            return normalize_unit(cont * g);
        }
        pa = std::move(pb);
        pb = primitive_split(std::move(r)).first;
    }
}

Polynomial gcd_many(const std::vector<Polynomial>& fs) {
    Polynomial acc = Polynomial::zero(fs.at(0).context());
    bool seen = false;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        acc = seen ? gcd(acc, f) : normalize_unit(f);
        seen = true;
        if (acc.is_constant()) return acc;
    }
    if (!seen) throw undefined_gcd();
    return acc;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        throw error("lcm of the zero polynomial is undefined");
    }
    return normalize_unit(exact_div(a * b, gcd(a, b)));
}

Polynomial radical(const Polynomial& f) {
    if (f.is_zero()) throw error("radical of the zero polynomial is undefined");
    const Context& ctx = f.context();
    if (f.is_constant()) return Polynomial::constant(ctx, 1L);
    std::vector<Polynomial> gens{f};
    for (unsigned v : f.variables_used()) {
        Polynomial d = f.derivative(v);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    Polynomial g = gcd_many(gens);
    return normalize_unit(exact_div(f, g));
}

long radical_degree(const Polynomial& f) { return radical(f).degree_checked(); }

Polynomial power_free_part(const Polynomial& f, unsigned e) {
    if (f.is_zero()) throw error("power-free part of the zero polynomial is undefined");
    if (e < 1) throw error("power-free index must be at least 1");
    if (f.is_constant()) return Polynomial::constant(f.context(), 1L);
    // Multiplicities never exceed the total degree, so larger exponents keep
    // every factor whole.
    long cap = f.degree_checked();
    if (static_cast<long>(e) >= cap) return normalize_unit(f);
    return gcd(f, radical(f).pow(e));
}

long power_free_degree(const Polynomial& f, unsigned e) {
    return power_free_part(f, e).degree_checked();
}

unsigned valuation(const Polynomial& f, const Polynomial& b) {
    if (f.is_zero()) throw error("valuation of the zero polynomial is undefined");
    if (b.is_zero() || b.is_constant()) {
        throw error("valuation requires a non-constant divisor");
    }
    unsigned e = 0;
    Polynomial r = f;
    while (true) {
        auto q = try_exact_div(r, b);
        if (!q) return e;
        r = std::move(*q);
        ++e;
    }
}

std::vector<SquareFreeFactor> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw error("square-free decomposition of zero is undefined");
    std::vector<SquareFreeFactor> out;
    if (f.is_constant()) return out;
    Polynomial rad = radical(f);
    // u_k = r_k(f)/r_{k-1}(f) is the product of components of multiplicity
    // >= k; s_k = u_k/u_{k+1} has exactly multiplicity k.
    std::vector<Polynomial> u;
    Polynomial prev = Polynomial::constant(f.context(), 1L);
    for (unsigned k = 1;; ++k) {
        Polynomial rk = gcd(f, rad.pow(k));
        Polynomial uk = normalize_unit(exact_div(rk, prev));
        if (uk.is_constant()) break;
        u.push_back(uk);
        prev = rk;
    }
    for (size_t k = 0; k < u.size(); ++k) {
        Polynomial next =
            (k + 1 < u.size()) ? u[k + 1] : Polynomial::constant(f.context(), 1L);
        Polynomial sk = normalize_unit(exact_div(u[k], next));
        if (!sk.is_constant()) {
            out.push_back({sk, static_cast<unsigned>(k + 1)});
        }
    }
    return out;
}

namespace {

struct PolyTextLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        long da = a.degree_checked(), db = b.degree_checked();
        if (da != db) return da < db;
        return a.to_string() < b.to_string();
    }
};

// Insert one square-free p into a pairwise-coprime square-free basis,
// splitting existing members as needed.
void refine_insert(std::vector<Polynomial>& basis, Polynomial p) {
    for (size_t i = 0; i < basis.size() && !p.is_constant(); ++i) {
        Polynomial g = gcd(p, basis[i]);
        if (g.is_constant()) continue;
        Polynomial rest = normalize_unit(exact_div(basis[i], g));
        basis[i] = g;
        if (!rest.is_constant()) basis.insert(basis.begin() + i + 1, rest);
        p = normalize_unit(exact_div(p, g));
    }
    if (!p.is_constant()) basis.push_back(std::move(p));
}

}  // namespace

CoprimeBasis coprime_basis(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw error("coprime basis of an empty family");
    const Context& ctx = fs.front().context();
    std::vector<Polynomial> basis;
    for (const auto& f : fs) {
        if (f.is_zero()) throw error("coprime basis member must be nonzero");
        for (const auto& part : squarefree_decomposition(f)) {
            refine_insert(basis, part.component);
        }
    }
    std::sort(basis.begin(), basis.end(), PolyTextLess{});
    CoprimeBasis out;
    out.components = std::move(basis);
    out.valuations.reserve(fs.size());
    out.units.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<unsigned> vals;
        vals.reserve(out.components.size());
        Polynomial rest = f;
        for (const auto& b : out.components) {
            unsigned e = 0;
            while (true) {
                auto q = try_exact_div(rest, b);
                if (!q) break;
                rest = std::move(*q);
                ++e;
            }
            vals.push_back(e);
        }
        if (!rest.is_constant()) {
            throw error("coprime basis reconstruction left a non-constant part");
        }
        out.valuations.push_back(std::move(vals));
        out.units.push_back(rest.constant_value());
    }
    return out;
}

}  // namespace abcpoly
