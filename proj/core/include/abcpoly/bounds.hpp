// One verifier per theorem-grade inequality, each producing a BoundReport
// with exact integer/rational sides, plus the constructive rho/sigma pipeline
// and the generic-substitution reduction to one variable.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcpoly/prng.hpp"
#include "abcpoly/sumsystem.hpp"

namespace abcpoly {

struct HypothesisCheckEntry {
    std::string name;
    bool passed;
    std::string witness;  // empty when passed
};

struct BoundEntry {
    std::string label;      // inequality id, e.g. "kl", "klhy"
    std::string parameter;  // e.g. "d'=3", "rho=2", empty when unparameterized
    Rational lhs;
    Rational rhs;
    bool holds;      // lhs <= rhs (strict entries note their strictness)
    bool equality;   // lhs == rhs
    bool required;   // informational sweeps set this false
    std::string note;
};

struct BoundReport {
    std::string theorem;
    bool applicable = false;  // all hypotheses passed
    std::vector<HypothesisCheckEntry> hypotheses;
    std::vector<BoundEntry> entries;
    std::vector<HypothesisCheckEntry> post_conditions;  // conditional clauses
    std::vector<std::string> trace;

    bool all_required_hold() const;
    bool any_equality() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    // Optional override for the d' sweep (inclusive); entries outside the
    // theorem's own range are reported as informational.
    std::optional<std::pair<long, long>> dprime_range;
    // Evaluate the constructive rho/sigma branch (lift + operator selection).
    bool constructive = true;
};

// Generic substitution x_i = p_i*y + q_i onto a line, with post-hoc exact
// verification: member and proper-subsum degrees preserved, gcd still 1.
// Retries with fresh randomness up to `budget` attempts.
struct ReductionResult {
    std::vector<Rational> p;
    std::vector<Rational> q;
    VanishingSum reduced;
    unsigned retries = 0;  // attempts beyond the first
    std::vector<std::string> trace;
};
ReductionResult reduce_to_univariate(const VanishingSum& sum, Prng& rng,
                                     unsigned budget = 32);

// Reduction of a system to the regime of the constructive pipeline:
// restrict to the minimal vanishing subsum containing a maximal-degree
// member, then substitute to one variable if needed.
struct PipelinePreparation {
    VanishingSum system;
    std::vector<size_t> restricted_indices;  // empty when no restriction
    std::optional<ReductionResult> reduction;
    std::vector<std::string> trace;
};
PipelinePreparation prepare_for_pipeline(const VanishingSum& sum, Prng& rng);

// The constructive pipeline on a univariate system with gcd 1, no vanishing
// proper subsum, and span dimension >= 2: lift, operator selection on the
// first n-1 lifted members, exact nonvanishing check of the generalized
// Wronskian. rho is the maximal operator order, sigma the sum of
// (order - 1).
struct RhoSigmaResult {
    size_t rho = 0;
    size_t sigma = 0;
    std::vector<DeltaOperator> deltas;
    LiftedSystem lifted;
    Polynomial wronskian;
    size_t order_one_count = 0;
};
RhoSigmaResult compute_rho_sigma(const VanishingSum& sum);

BoundReport check_mason3(const VanishingSum& sum);
BoundReport check_masons(const VanishingSum& sum);
BoundReport check_masons2(const VanishingSum& sum);
BoundReport check_masons2a(const VanishingSum& sum);
BoundReport check_masons3(const VanishingSum& sum, const VerifyOptions& opt = {});
BoundReport check_masons3a(const VanishingSum& sum, const VerifyOptions& opt = {});

// Fermat-Catalan: f_i = g_i^{e_i} must form an admissible vanishing sum; the
// strict rational inequality sum(1/e_i) > 1/(d-1) and its degree form.
BoundReport check_fermat_catalan(const std::vector<Polynomial>& gs,
                                 const std::vector<unsigned>& es);

// Decomposition of a vanishing sum of equal powers into similarity classes.
struct GenFerReport {
    unsigned exponent = 0;
    size_t n = 0;
    bool premise_met = false;  // e >= n(n-2)
    std::vector<std::vector<size_t>> classes;
    std::vector<bool> class_vanishes;
    bool decomposition_exists = false;
    bool theorem_violation = false;  // premise met yet no decomposition
    std::string note;
};
GenFerReport genfer_decompose(const std::vector<Polynomial>& gs, unsigned e);

// Degree-drop bound for the last member of a vanishing sum; constants are
// consolidated into the last member first when that preserves the statement.
BoundReport check_davenport(const VanishingSum& sum, const VerifyOptions& opt = {});

// The power form: sum of n powers that does NOT vanish; includes the
// classical cube-vs-square bound when (e_1, e_2) = (3, 2).
BoundReport check_davenport_powers(const std::vector<Polynomial>& gs,
                                   const std::vector<unsigned>& es,
                                   const VerifyOptions& opt = {});

BoundReport check_thA(const VanishingSum& sum);
BoundReport check_thaa(const VanishingSum& sum, const VerifyOptions& opt = {});

// Sharper bounds when every d-subset of the members is independent.
BoundReport check_special_position(const VanishingSum& sum,
                                   const VerifyOptions& opt = {});

// Utility shared by verifiers and the brute-force engine.
Rational binomial2(long a);  // a*(a-1)/2, zero for a < 2
long max_member_degree(const VanishingSum& sum);
long sum_radical_degrees(const std::vector<Polynomial>& fs);
Polynomial product_of(const std::vector<Polynomial>& fs);

}  // namespace abcpoly
