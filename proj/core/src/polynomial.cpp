#include "abcpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace abcpoly {

std::optional<unsigned> VarSet::index_of(const std::string& name) const {
    for (unsigned i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

Context make_context(unsigned conductor, std::vector<std::string> var_names) {
    return Context{CycField::get(conductor),
                   std::make_shared<VarSet>(std::move(var_names))};
}

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(unsigned var, unsigned exp) {
    std::vector<unsigned> e(var + 1, 0);
    e[var] = exp;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<unsigned> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (exps_.size() > other.exps_.size()) {
        for (size_t i = other.exps_.size(); i < exps_.size(); ++i) {
            if (exps_[i] > 0) return false;
        }
    }
    for (size_t i = 0; i < std::min(exps_.size(), other.exps_.size()); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    std::vector<unsigned> e(other.exps_.size(), 0);
    for (size_t i = 0; i < other.exps_.size(); ++i) {
        unsigned sub = i < exps_.size() ? exps_[i] : 0;
        e[i] = other.exps_[i] - sub;
    }
    return Monomial(std::move(e));
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.exps_.size() ? a.exps_[i] : 0;
        unsigned eb = i < b.exps_.size() ? b.exps_[i] : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

long Degree::value() const {
    if (!finite_) throw error("degree of the zero polynomial has no numeric value");
    return value_;
}

Polynomial Polynomial::zero(const Context& ctx) { return Polynomial(ctx); }

Polynomial Polynomial::constant(const Context& ctx, CycNumber c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

Polynomial Polynomial::constant(const Context& ctx, const Rational& q) {
    return constant(ctx, CycNumber::from_rational(ctx.field, q));
}

Polynomial Polynomial::constant(const Context& ctx, long v) {
    return constant(ctx, Rational(v));
}

Polynomial Polynomial::variable(const Context& ctx, unsigned var, unsigned exp) {
    if (var >= ctx.var_count()) throw error("variable index out of range");
    if (exp == 0) return constant(ctx, 1L);
    Polynomial p(ctx);
    p.terms_.emplace(Monomial::variable(var, exp), CycNumber::one(ctx.field));
    return p;
}

Polynomial Polynomial::term(const Context& ctx, Monomial m, CycNumber c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(const Context& ctx, TermMap terms) {
    Polynomial p(ctx);
    for (auto& [m, c] : terms) {
        if (!c.is_zero()) p.terms_.emplace(m, c);
    }
    return p;
}

CycNumber Polynomial::constant_value() const {
    auto it = terms_.find(Monomial());
    if (it == terms_.end()) return CycNumber::zero(ctx_.field);
    return it->second;
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree::finite(terms_.begin()->first.total_degree());
}

long Polynomial::degree_checked() const {
    if (terms_.empty()) throw error("degree of the zero polynomial requested");
    return terms_.begin()->first.total_degree();
}

long Polynomial::degree_in(unsigned var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max<long>(d, m.exponent(var));
    }
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw error("leading monomial of zero");
    return terms_.begin()->first;
}

const CycNumber& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw error("leading coefficient of zero");
    return terms_.begin()->second;
}

CycNumber Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return CycNumber::zero(ctx_.field);
    return it->second;
}

void Polynomial::add_term(const Monomial& m, const CycNumber& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ctx_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (!ctx_.compatible_with(rhs.ctx_)) {
        throw incompatible_context("polynomial contexts differ");
    }
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (!ctx_.compatible_with(rhs.ctx_)) {
        throw incompatible_context("polynomial contexts differ");
    }
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!a.ctx_.compatible_with(b.ctx_)) {
        throw incompatible_context("polynomial contexts differ");
    }
    Polynomial p(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            p.add_term(ma.times(mb), ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::scale(const CycNumber& c) const {
    Polynomial p(ctx_);
    if (c.is_zero()) return p;
    for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
    return p;
}

Polynomial Polynomial::scale(const Rational& q) const {
    return scale(CycNumber::from_rational(ctx_.field, q));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(ctx_, 1L);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ctx_.compatible_with(b.ctx_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    }
    return true;
}

Polynomial Polynomial::derivative(unsigned var) const {
    Polynomial p(ctx_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exponents();
        exps[var] -= 1;
        p.add_term(Monomial(std::move(exps)), c.scale(Rational(e)));
    }
    return p;
}

std::vector<unsigned> Polynomial::variables_used() const {
    std::vector<bool> used(ctx_.var_count(), false);
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) used[i] = true;
        }
    }
    std::vector<unsigned> out;
    for (unsigned i = 0; i < used.size(); ++i) {
        if (used[i]) out.push_back(i);
    }
    return out;
}

bool Polynomial::uses_only(unsigned var) const {
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0 && i != var) return false;
        }
    }
    return true;
}

CycNumber Polynomial::evaluate(const std::vector<CycNumber>& point) const {
    if (point.size() != ctx_.var_count()) {
        throw error("evaluation point arity mismatch");
    }
    CycNumber acc = CycNumber::zero(ctx_.field);
    for (const auto& [m, c] : terms_) {
        CycNumber v = c;
        const auto& e = m.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) v *= point[i].pow(e[i]);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::leading_form() const {
    if (terms_.empty()) return *this;
    unsigned top = terms_.begin()->first.total_degree();
    Polynomial p(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() == top) p.terms_.emplace(m, c);
    }
    return p;
}

Polynomial Polynomial::substitute_affine_line(const Context& target,
                                              const std::vector<Rational>& p,
                                              const std::vector<Rational>& q) const {
    if (target.var_count() != 1) throw error("target context must be univariate");
    if (target.conductor() != ctx_.conductor()) {
        throw incompatible_context("substitution across conductors");
    }
    if (p.size() != ctx_.var_count() || q.size() != ctx_.var_count()) {
        throw error("substitution arity mismatch");
    }
    size_t l = ctx_.var_count();
    // Cache powers of (p_t*y + q_t) per variable.
    std::vector<std::vector<Polynomial>> powers(l);
    std::vector<Polynomial> lines;
    lines.reserve(l);
    for (size_t t = 0; t < l; ++t) {
        Polynomial line = Polynomial::variable(target, 0).scale(p[t]) +
                          Polynomial::constant(target, q[t]);
        lines.push_back(line);
        powers[t].push_back(Polynomial::constant(target, 1L));
    }
    Polynomial acc = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(
            target, CycNumber::from_coeffs(target.field, c.coeffs()));
        const auto& e = m.exponents();
        for (size_t t = 0; t < e.size(); ++t) {
            while (powers[t].size() <= e[t]) {
                powers[t].push_back(powers[t].back() * lines[t]);
            }
            if (e[t] > 0) term = term * powers[t][e[t]];
        }
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::map_into(const Context& target,
                                const std::vector<unsigned>& var_map) const {
    if (target.conductor() != ctx_.conductor()) {
        throw incompatible_context("mapping across conductors");
    }
    if (var_map.size() != ctx_.var_count()) throw error("variable map arity mismatch");
    Polynomial p(target);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> exps(target.var_count(), 0);
        const auto& e = m.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) exps.at(var_map[i]) += e[i];
        }
        p.add_term(Monomial(std::move(exps)),
                   CycNumber::from_coeffs(target.field, c.coeffs()));
    }
    return p;
}

namespace {

std::string monomial_text(const Monomial& m, const VarSet& vars) {
    std::ostringstream out;
    bool first = true;
    const auto& e = m.exponents();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        out << vars.name(static_cast<unsigned>(i));
        if (e[i] > 1) out << "^" << e[i];
        first = false;
    }
    return out.str();
}

// Coefficient body without sign handling done by the caller; `negate` flips
// the printed value. Returns text and whether it needs parentheses before '*'.
std::pair<std::string, bool> coefficient_text(const CycNumber& c, bool negate) {
    CycNumber v = negate ? -c : c;
    if (v.is_rational()) {
        return {v.rational_value().get_str(), false};
    }
    const auto& coeffs = v.coeffs();
    size_t nonzero = 0;
    for (const auto& x : coeffs) {
        if (x != 0) ++nonzero;
    }
    std::string body = v.to_string();
    return {body, nonzero > 1};
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c.print_sign() < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        auto [body, needs_parens] = coefficient_text(c, negative);
        if (m.is_constant()) {
            out << (needs_parens ? "(" + body + ")" : body);
        } else if (body == "1") {
            out << monomial_text(m, *ctx_.vars);
        } else {
            out << (needs_parens ? "(" + body + ")" : body) << "*"
                << monomial_text(m, *ctx_.vars);
        }
        first = false;
    }
    return out.str();
}

}  // namespace abcpoly
