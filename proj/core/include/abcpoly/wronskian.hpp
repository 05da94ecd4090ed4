// Classical and generalized Wronskian determinants, differential-operator
// products, and the constructive operator selection for families of the shape
// (linear form in z_1..z_l) * (univariate in y).
#pragma once

#include <vector>

#include "abcpoly/linalg.hpp"
#include "abcpoly/polynomial.hpp"

namespace abcpoly {

// A finite product of first-order partial derivatives, stored as a sorted
// multiset of variable indices. The identity operator is the empty product;
// the order o(Delta) is the multiset size.
class DeltaOperator {
   public:
    DeltaOperator() = default;
    static DeltaOperator partial(unsigned var) {
        DeltaOperator d;
        d.factors_.push_back(var);
        return d;
    }
    // This operator extended by one more d/d(var).
    DeltaOperator then_partial(unsigned var) const;

    unsigned order() const { return static_cast<unsigned>(factors_.size()); }
    bool is_identity() const { return factors_.empty(); }
    const std::vector<unsigned>& factors() const { return factors_; }
    unsigned count(unsigned var) const;

    Polynomial apply(const Polynomial& f) const;

    bool operator==(const DeltaOperator& other) const {
        return factors_ == other.factors_;
    }
    std::string to_string(const VarSet& vars) const;

   private:
    std::vector<unsigned> factors_;  // sorted
};

// Determinant of a square polynomial matrix (row-major). Cofactor expansion
// for n <= 4, fraction-free Bareiss elimination above.
Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m);

// det of the n x n matrix with rows f, f', ..., f^(n-1); all fs univariate in
// `var`.
Polynomial classical_wronskian(const std::vector<Polynomial>& fs, unsigned var);

// det with entry (i, j) = deltas[i] applied to fs[j].
Polynomial generalized_wronskian(const std::vector<Polynomial>& fs,
                                 const std::vector<DeltaOperator>& deltas);

// Operator selection for linearly independent f_i of the shape
// (lambda_1 z_1 + ... + lambda_l z_l) * (univariate in y): returns
// Delta_1..Delta_n with W_Delta(f_1..f_n) != 0, each Delta_i either a single
// d/dz_j or d/dy times Delta_{i-1}. Throws not_independent when the
// reductions exhaust (linearly dependent input).
//
// y_var is the univariate variable's index, z_vars the linear-form variables,
// all within the common context of fs.
std::vector<DeltaOperator> construct_delta(const std::vector<Polynomial>& fs,
                                           unsigned y_var,
                                           const std::vector<unsigned>& z_vars);

// Shape predicate for construct_delta outputs: every operator is a single
// d/dz_j, or extends its predecessor by one d/dy.
bool delta_shape_ok(const std::vector<DeltaOperator>& deltas, unsigned y_var,
                    const std::vector<unsigned>& z_vars);

}  // namespace abcpoly
