// Generators for the named extremal examples and an independent brute-force
// engine: it re-derives every bound from degrees, radicals and gcds alone
// (no lift, no Wronskian) and cross-checks the verifier verdicts.
#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "abcpoly/bounds.hpp"

namespace abcpoly {

struct DavenportPair {
    Polynomial f;        // x^2 + 2
    Polynomial g;        // x^3 + 3x
    Polynomial residue;  // f^3 - g^2, recomputed and checked
};
DavenportPair davenport_pair(const CycFieldPtr& field = CycField::get(4));

// f_i = C(n-2, i-1) x^{N(i-1)} for i < n, f_n = -(x^N + 1)^{n-2}; the sum
// vanishes by the binomial theorem, d = n-1, one constant member.
VanishingSum family_factor_tight(size_t n, unsigned N,
                                 const CycFieldPtr& field = CycField::get(4));

// The residual-term families built from c-th roots of unity, c = ceil(n/2).
// Requires a conductor divisible by lcm(4, c).
enum class ResidualVariant { NoneConstant, FirstConstant };
VanishingSum family_residual(size_t n, ResidualVariant variant,
                             const CycFieldPtr& field);
unsigned residual_conductor(size_t n);  // lcm(4, ceil(n/2))

struct SearchSpace {
    size_t terms = 3;                    // n
    unsigned degree_cap = 2;
    std::vector<Rational> coefficients;  // finite coefficient set
    CycFieldPtr field = CycField::get(1);
    std::uint64_t budget = 10'000'000;   // candidate tuples
};

struct CatalogEntry {
    std::vector<std::string> members;  // canonical texts, canonical order
    // theorem id -> minimal slack over that theorem's required entries
    std::vector<std::pair<std::string, Rational>> slack;
    std::vector<std::string> equalities;  // theorems attaining slack 0
};

struct BruteForceResult {
    std::vector<CatalogEntry> catalog;      // hypothesis-passing systems
    std::vector<std::string> violations;    // bound failures (expected empty)
    std::vector<std::string> mismatches;    // disagreements with the verifiers
    std::uint64_t enumerated = 0;           // candidate tuples
    std::uint64_t passing = 0;
};

// Exhaustive enumeration of vanishing tuples (last member forced); systems
// equal up to a common scalar and a permutation are deduplicated via a
// canonical form. When cross_check is set, every passing system is also run
// through the verifier suite and verdicts are compared.
BruteForceResult brute_force_bounds(const SearchSpace& space,
                                    bool cross_check = true);

struct FermatSolution {
    Polynomial g1, g2;
    Polynomial root;  // g3 = unit^(1/e3) * root over the complex numbers
    CycNumber unit;
    std::string note;
};

// Enumerates coprime nonconstant pairs (g1, g2) with deg <= degree_cap and
// coefficients in the given set, and reports every pair whose residual
// -g1^{e1} - g2^{e2} is an exact e3-th power (multiplicity test on the
// square-free structure, then an exact power comparison).
std::vector<FermatSolution> fermat_search(const std::array<unsigned, 3>& es,
                                          unsigned degree_cap,
                                          const std::vector<Rational>& coefficients,
                                          const CycFieldPtr& field = CycField::get(1),
                                          std::uint64_t budget = 10'000'000);

}  // namespace abcpoly
