// Divisibility machinery over Q(zeta_m)[x_1..x_l]: exact division, gcd/lcm,
// radicals and e-th-power-free parts, valuations, square-free decomposition
// and gcd-free (coprime) bases.
//
// Irreducible factorization is deliberately absent. Wherever a bound counts
// irreducible factors, the pairwise-coprime square-free basis components stand
// in: every irreducible factor of one component shares the same divisibility
// pattern across the inputs, so component counting weighted by component
// degree is exact.
#pragma once

#include <vector>

#include "abcpoly/polynomial.hpp"

namespace abcpoly {

// Leading coefficient (graded-lex) forced to 1. Zero stays zero.
Polynomial normalize_unit(const Polynomial& f);

// Quotient a/b; throws not_a_factor unless b divides a exactly.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

// Unit-normalized gcd; gcd(a, 0) = normalize(a); gcd(0, 0) throws
// undefined_gcd. Multivariate inputs reduce recursively by content/primitive
// part with primitive pseudo-remainder sequences.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial gcd_many(const std::vector<Polynomial>& fs);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// Square-free part of a nonzero f: f / gcd(f, all partial derivatives),
// unit-normalized. Constants map to 1.
Polynomial radical(const Polynomial& f);
long radical_degree(const Polynomial& f);  // r(f)

// gcd(f, radical(f)^e): keeps each factor with multiplicity min(e, original).
Polynomial power_free_part(const Polynomial& f, unsigned e);
long power_free_degree(const Polynomial& f, unsigned e);  // r_e(f)

// Largest e with b^e | f; f nonzero, b non-constant.
unsigned valuation(const Polynomial& f, const Polynomial& b);

// f = unit * prod(component^multiplicity) with components square-free,
// pairwise coprime, non-constant, unit-normalized, sorted canonically.
struct SquareFreeFactor {
    Polynomial component;
    unsigned multiplicity;
};
std::vector<SquareFreeFactor> squarefree_decomposition(const Polynomial& f);

// A common gcd-free basis for a family: pairwise-coprime square-free
// non-constant components such that each input is a unit times a product of
// component powers. valuations[i][j] is the multiplicity of components[j] in
// fs[i]; units[i] is the leftover constant.
struct CoprimeBasis {
    std::vector<Polynomial> components;
    std::vector<std::vector<unsigned>> valuations;
    std::vector<CycNumber> units;
};
CoprimeBasis coprime_basis(const std::vector<Polynomial>& fs);

}  // namespace abcpoly
