// Exact arithmetic in the cyclotomic field Q(zeta_m).
//
// A CycNumber is the unique residue modulo the m-th cyclotomic polynomial
// Phi_m, stored as a coefficient vector of length phi(m) over arbitrary
// precision rationals. The conductor m is fixed per computation context;
// values from different conductors never mix (no automatic lifting).
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "abcpoly/errors.hpp"

namespace abcpoly {

using Rational = mpq_class;

// Rationals are kept in lowest terms with positive denominator; mpq_class
// arithmetic preserves that, but literals built from parts must be
// canonicalized once.
Rational make_rational(long num, long den = 1);

unsigned euler_phi(unsigned m);

// Coefficients of Phi_m, ascending degree, monic, integer-valued.
// Computed by exact division of x^m - 1 by the product of Phi_d over the
// proper divisors d of m; memoized per conductor.
const std::vector<Rational>& cyclotomic_coeffs(unsigned m);

class CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

class CycField {
   public:
    // Shared immutable instance per conductor.
    static CycFieldPtr get(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }  // phi(m)
    // Phi_m, ascending, size degree()+1, leading coefficient 1.
    const std::vector<Rational>& modulus() const { return modulus_; }

   private:
    explicit CycField(unsigned conductor);

    unsigned conductor_;
    unsigned degree_;
    std::vector<Rational> modulus_;
};

class CycNumber {
   public:
    static CycNumber zero(const CycFieldPtr& field);
    static CycNumber one(const CycFieldPtr& field);
    static CycNumber from_rational(const CycFieldPtr& field, const Rational& q);
    static CycNumber from_integer(const CycFieldPtr& field, long v);
    // zeta_m^k, any integer k (reduced modulo m, then modulo Phi_m).
    static CycNumber root_of_unity(const CycFieldPtr& field, long k);
    // Residue of the given zeta-power coefficients (ascending, any length).
    static CycNumber from_coeffs(const CycFieldPtr& field,
                                 std::vector<Rational> coeffs);

    const CycFieldPtr& field() const { return field_; }
    unsigned conductor() const { return field_->conductor(); }
    // Reduced coefficients, length phi(m).
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Value as a rational; requires is_rational().
    Rational rational_value() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& rhs);
    CycNumber& operator-=(const CycNumber& rhs);
    CycNumber& operator*=(const CycNumber& rhs);
    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }

    CycNumber scale(const Rational& q) const;

    // Multiplicative inverse via the extended gcd of the representative with
    // Phi_m. Throws division_by_zero on zero.
    CycNumber inverse() const;
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) {
        return a * b.inverse();
    }

    CycNumber pow(long e) const;

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) {
        return !(a == b);
    }

    // Canonical literal, parseable by the expression grammar:
    // descending zeta powers, e.g. "2*zeta^2 - 1/3".
    std::string to_string() const;

    // Sign used by the canonical printer: sign of the leading (highest power)
    // nonzero rational coefficient; 0 for zero.
    int print_sign() const;

   private:
    CycNumber(CycFieldPtr field, std::vector<Rational> reduced);
    void require_same_field(const CycNumber& other) const;

    CycFieldPtr field_;
    std::vector<Rational> coeffs_;
};

}  // namespace abcpoly
