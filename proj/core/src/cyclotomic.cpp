#include "abcpoly/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace abcpoly {

Rational make_rational(long num, long den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Dense = std::vector<Rational>;  // ascending coefficients

void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, both operands nonzero, remainder must vanish.
Dense dense_exact_div(Dense num, const Dense& den) {
    Dense q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) {
            num[shift + i] -= c * den[i];
        }
        dense_trim(num);
    }
    if (!num.empty()) throw not_a_factor("inexact dense division");
    return q;
}

std::mutex g_cyclo_mutex;
std::map<unsigned, Dense> g_cyclo_cache;

const Dense& cyclotomic_locked(unsigned m) {
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;
    if (m == 1) {
        Dense phi1{Rational(-1), Rational(1)};  // x - 1
        return g_cyclo_cache.emplace(1, std::move(phi1)).first->second;
    }
    Dense num(m + 1, Rational(0));  // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = dense_exact_div(std::move(num), cyclotomic_locked(d));
    }
    return g_cyclo_cache.emplace(m, std::move(num)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_coeffs(unsigned m) {
    if (m < 1) throw error("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(m);
}

CycField::CycField(unsigned conductor)
    : conductor_(conductor),
      degree_(euler_phi(conductor)),
      modulus_(cyclotomic_coeffs(conductor)) {}

CycFieldPtr CycField::get(unsigned conductor) {
    static std::mutex mutex;
    static std::map<unsigned, CycFieldPtr> cache;
    if (conductor < 1) throw error("conductor must be positive");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    CycFieldPtr field(new CycField(conductor));
    cache.emplace(conductor, field);
    return field;
}

CycNumber::CycNumber(CycFieldPtr field, std::vector<Rational> reduced)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {}

void CycNumber::require_same_field(const CycNumber& other) const {
    if (field_->conductor() != other.field_->conductor()) {
        throw incompatible_context(
            "mixing conductors " + std::to_string(field_->conductor()) + " and " +
            std::to_string(other.field_->conductor()));
    }
}

CycNumber CycNumber::zero(const CycFieldPtr& field) {
    return CycNumber(field, std::vector<Rational>(field->degree(), Rational(0)));
}

CycNumber CycNumber::one(const CycFieldPtr& field) {
    return from_rational(field, Rational(1));
}

CycNumber CycNumber::from_rational(const CycFieldPtr& field, const Rational& q) {
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = q;
    return CycNumber(field, std::move(c));
}

CycNumber CycNumber::from_integer(const CycFieldPtr& field, long v) {
    return from_rational(field, Rational(v));
}

CycNumber CycNumber::from_coeffs(const CycFieldPtr& field,
                                 std::vector<Rational> coeffs) {
    const std::vector<Rational>& mod = field->modulus();
    unsigned phi = field->degree();
    // Reduce modulo the monic Phi_m.
    while (coeffs.size() > phi) {
        Rational lead = coeffs.back();
        size_t shift = coeffs.size() - 1 - phi;
        if (lead != 0) {
            for (unsigned i = 0; i < phi; ++i) {
                coeffs[shift + i] -= lead * mod[i];
            }
        }
        coeffs.pop_back();
    }
    coeffs.resize(phi, Rational(0));
    return CycNumber(field, std::move(coeffs));
}

CycNumber CycNumber::root_of_unity(const CycFieldPtr& field, long k) {
    unsigned m = field->conductor();
    long r = k % static_cast<long>(m);
    if (r < 0) r += m;
    std::vector<Rational> c(static_cast<size_t>(r) + 1, Rational(0));
    c.back() = 1;
    return from_coeffs(field, std::move(c));
}

bool CycNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

Rational CycNumber::rational_value() const {
    if (!is_rational()) throw error("value is not rational");
    return coeffs_[0];
}

CycNumber CycNumber::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycNumber(field_, std::move(c));
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
    require_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
    require_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
    require_same_field(rhs);
    size_t n = coeffs_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = from_coeffs(field_, std::move(prod));
    return *this;
}

CycNumber CycNumber::scale(const Rational& q) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * q;
    return CycNumber(field_, std::move(c));
}

namespace {

// Remainder of dense rational polynomials, divisor monic not required.
Dense dense_rem(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        dense_trim(a);
    }
    return a;
}

Dense dense_sub_scaled(Dense a, const Dense& b, const Dense& q) {
    // a - q*b
    if (!q.empty() && !b.empty()) {
        size_t need = q.size() + b.size() - 1;
        if (a.size() < need) a.resize(need, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                a[i + j] -= q[i] * b[j];
            }
        }
    }
    dense_trim(a);
    return a;
}

}  // namespace

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    // Extended Euclid over Q[x] on (a, Phi_m): u*a + v*Phi = gcd = constant.
    Dense r0(coeffs_.begin(), coeffs_.end());
    dense_trim(r0);
    Dense r1 = field_->modulus();
    Dense u0{Rational(1)};
    Dense u1;  // zero
    while (!r1.empty()) {
        // quotient of r0 by r1
        Dense q;
        Dense rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            Rational c = rem.back() / r1.back();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            dense_trim(rem);
        }
        Dense u2 = dense_sub_scaled(u0, u1, q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 is a nonzero constant (Phi_m irreducible over Q, a nonzero).
    if (r0.size() != 1) throw error("inverse: gcd with modulus not constant");
    Rational inv_c = Rational(1) / r0[0];
    for (Rational& c : u0) c *= inv_c;
    return from_coeffs(field_, std::move(u0));
}

CycNumber CycNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber base = *this;
    CycNumber acc = one(field_);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    a.require_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

int CycNumber::print_sign() const {
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != 0) return sgn(coeffs_[i]);
    }
    return 0;
}

std::string CycNumber::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs_c == 1);
        if (i == 0) {
            out << abs_c.get_str();
        } else {
            if (!unit) out << abs_c.get_str() << "*";
            out << "zeta";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace abcpoly
