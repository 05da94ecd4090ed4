// Sparse multivariate polynomials over Q(zeta_m) in canonical graded-lex form.
//
// Terms are stored leading-first in an ordered map, so equal polynomials have
// identical serializations. The degree of the zero polynomial is a
// distinguished minus-infinity value, never a number.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abcpoly/cyclotomic.hpp"

namespace abcpoly {

class VarSet {
   public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    const std::vector<std::string>& names() const { return names_; }
    size_t size() const { return names_.size(); }
    const std::string& name(unsigned i) const { return names_.at(i); }
    std::optional<unsigned> index_of(const std::string& name) const;
    bool operator==(const VarSet& other) const { return names_ == other.names_; }

   private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// A computation context: the coefficient field plus the variable set.
struct Context {
    CycFieldPtr field;
    VarSetPtr vars;

    bool compatible_with(const Context& other) const {
        return field->conductor() == other.field->conductor() &&
               (vars == other.vars || *vars == *other.vars);
    }
    unsigned conductor() const { return field->conductor(); }
    size_t var_count() const { return vars->size(); }
};

Context make_context(unsigned conductor, std::vector<std::string> var_names);

// Exponent vector in trailing-zero-free canonical form.
class Monomial {
   public:
    Monomial() = default;  // the constant monomial
    explicit Monomial(std::vector<unsigned> exps);
    static Monomial variable(unsigned var, unsigned exp = 1);

    unsigned exponent(unsigned var) const {
        return var < exps_.size() ? exps_[var] : 0;
    }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned total_degree() const;
    bool is_constant() const { return exps_.empty(); }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    // Graded lexicographic: total degree first, then lex with the first
    // variable strongest. Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

   private:
    std::vector<unsigned> exps_;
};

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

// Total degree or minus infinity (zero polynomial).
class Degree {
   public:
    static Degree minus_infinity() { return Degree(); }
    static Degree finite(long v) {
        Degree d;
        d.finite_ = true;
        d.value_ = v;
        return d;
    }
    bool is_minus_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }
    long value() const;

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Degree& a, const Degree& b) {
        return a == b || a < b;
    }

   private:
    Degree() = default;
    bool finite_ = false;
    long value_ = 0;
};

class Polynomial {
   public:
    using TermMap = std::map<Monomial, CycNumber, GradedLexGreater>;

    static Polynomial zero(const Context& ctx);
    static Polynomial constant(const Context& ctx, CycNumber c);
    static Polynomial constant(const Context& ctx, const Rational& q);
    static Polynomial constant(const Context& ctx, long v);
    static Polynomial variable(const Context& ctx, unsigned var, unsigned exp = 1);
    static Polynomial term(const Context& ctx, Monomial m, CycNumber c);
    static Polynomial from_terms(const Context& ctx, TermMap terms);

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    // The constant term's value (zero if absent).
    CycNumber constant_value() const;

    Degree degree() const;
    // Degree as a plain integer; requires a nonzero polynomial.
    long degree_checked() const;
    // Degree in one variable.
    long degree_in(unsigned var) const;

    const Monomial& leading_monomial() const;
    const CycNumber& leading_coefficient() const;
    CycNumber coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scale(const CycNumber& c) const;
    Polynomial scale(const Rational& q) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    Polynomial derivative(unsigned var) const;

    // Indices of variables that actually occur.
    std::vector<unsigned> variables_used() const;
    bool uses_only(unsigned var) const;

    CycNumber evaluate(const std::vector<CycNumber>& point) const;
    // Sum of the terms of maximal total degree; zero stays zero.
    Polynomial leading_form() const;

    // Image under x_t -> p[t]*y + q[t] in a univariate target context (same
    // conductor, one variable).
    Polynomial substitute_affine_line(const Context& target,
                                      const std::vector<Rational>& p,
                                      const std::vector<Rational>& q) const;

    // Reinterpret in a context with more variables; var_map[i] is the target
    // index of source variable i.
    Polynomial map_into(const Context& target,
                        const std::vector<unsigned>& var_map) const;

    // Canonical text form: graded-lex descending terms, explicit '*' and '^',
    // zeta literals; parses back to the identical polynomial.
    std::string to_string() const;

   private:
    explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}
    void add_term(const Monomial& m, const CycNumber& c);

    Context ctx_;
    TermMap terms_;
};

}  // namespace abcpoly
