// Vanishing sums f_1 + ... + f_n = 0 and their analyses: subsum structure,
// hypothesis diagnostics, the z-lift that removes spurious linear relations,
// divisor chains, and per-component divisibility counts.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abcpoly/polyops.hpp"
#include "abcpoly/wronskian.hpp"

namespace abcpoly {

class VanishingSum {
   public:
    // Validates: at least two members, all nonzero, exact zero total.
    static VanishingSum build(std::vector<Polynomial> fs);

    size_t size() const { return fs_.size(); }                 // n
    const std::vector<Polynomial>& members() const { return fs_; }
    const Polynomial& member(size_t i) const { return fs_.at(i); }
    size_t constant_count() const { return k_; }               // k
    size_t span_dimension() const { return d_; }               // d
    const Context& context() const { return fs_.front().context(); }

    // True when at most one variable occurs across all members.
    bool univariate() const { return vars_used_.size() <= 1; }
    // The single occurring variable (0 for all-constant systems).
    unsigned main_variable() const {
        return vars_used_.empty() ? 0u : vars_used_.front();
    }
    const std::vector<unsigned>& variables_used() const { return vars_used_; }
    bool all_constant() const { return k_ == fs_.size(); }
    long max_degree() const;

   private:
    explicit VanishingSum(std::vector<Polynomial> fs);

    std::vector<Polynomial> fs_;
    size_t k_ = 0;
    size_t d_ = 0;
    std::vector<unsigned> vars_used_;
};

struct Subsum {
    std::vector<size_t> indices;  // ascending
    bool minimal;                 // no proper nonempty vanishing subset inside
};

// All nonempty proper index subsets with zero subsum. Throws limit_exceeded
// beyond the enumeration cap.
std::vector<Subsum> vanishing_subsums(const VanishingSum& sum, size_t limit = 20);

enum class HypothesisMode {
    StrictGcd,   // every vanishing subsum (including the full sum) has gcd 1
    DegBounded,  // every vanishing subsum has deg gcd <= deg f_n
    Pairwise,    // all pairs coprime
};

struct HypothesisReport {
    HypothesisMode mode;
    bool passed;
    std::vector<size_t> witness;  // first violating subset, empty if passed
    std::string detail;
};

HypothesisReport hypothesis_check(const VanishingSum& sum, HypothesisMode mode,
                                  size_t limit = 20);

// Result of merging all constant members into the last member. Identity when
// nothing changes (no constants, or the last member is itself constant).
struct ConsolidationResult {
    VanishingSum sum;
    bool changed;
    std::string note;
};
ConsolidationResult consolidate_constants(const VanishingSum& sum);

// The lift: reorder so a basis comes first, solve the dependency matrix
// lambda, and multiply each member by a linear form in fresh z variables so
// that the defining sum is the only linear relation left.
struct LiftedSystem {
    std::vector<Polynomial> tilde;     // reordered members, original context
    std::vector<size_t> permutation;   // tilde[i] = original[permutation[i]]
    size_t dim;                        // d = basis size
    // lambda[j][i] with j indexing tilde[dim + j], i indexing tilde[i].
    std::vector<std::vector<CycNumber>> lambda;
    Context lifted_context;            // [y, z_{d+1}, ..., z_n]
    std::vector<Polynomial> lifted;    // n members, sum exactly zero
    unsigned y_var = 0;
    std::vector<unsigned> z_vars;      // indices within lifted_context
};

// Requires: univariate, gcd of all members 1, no vanishing proper subsum.
LiftedSystem lift(const VanishingSum& sum);

// Bipartite dependency graph on {basis} U {non-basis} with edges at nonzero
// lambda entries, its connectivity, and the exact nullspace of the lifted
// family (expected: the all-ones line).
struct ConnectivityWitness {
    bool connected;
    std::vector<std::vector<size_t>> components;        // vertex partition
    std::vector<std::pair<size_t, size_t>> edges;       // (j, i) positions
    std::vector<std::vector<CycNumber>> nullspace_basis;
    bool nullspace_is_all_ones_line;
};
ConnectivityWitness connectivity_witness(const LiftedSystem& lifted);

// h_i = gcd over all i-element subsets of the lcm of the subset;
// h_1 | h_2 | ... | h_n.
struct DivisorChain {
    std::vector<Polynomial> h;
};
DivisorChain divisor_chain(const std::vector<Polynomial>& fs, size_t limit = 12);

// Per gcd-free-basis component b: (deg b, m_b) where m_b counts the members
// NOT divisible by b.
struct ComponentCount {
    Polynomial component;
    long degree;
    size_t not_divisible;
};
std::vector<ComponentCount> mp_counts(const std::vector<Polynomial>& fs);

}  // namespace abcpoly
