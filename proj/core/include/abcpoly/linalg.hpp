// Exact dense linear algebra over Q(zeta_m): rank, solve, nullspace, plus
// helpers viewing polynomial families as coefficient matrices.
#pragma once

#include <optional>
#include <vector>

#include "abcpoly/polynomial.hpp"

namespace abcpoly {

class Matrix {
   public:
    Matrix(size_t rows, size_t cols, const CycFieldPtr& field)
        : rows_(rows),
          cols_(cols),
          field_(field),
          a_(rows * cols, CycNumber::zero(field)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const CycFieldPtr& field() const { return field_; }
    CycNumber& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const CycNumber& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

   private:
    size_t rows_, cols_;
    CycFieldPtr field_;
    std::vector<CycNumber> a_;
};

size_t rank(Matrix m);

// One solution of A x = b with free variables set to zero; nullopt if
// inconsistent.
std::optional<std::vector<CycNumber>> solve(Matrix a, std::vector<CycNumber> b);

// Basis of the right nullspace, deterministic (one vector per free column,
// ordered by column index).
std::vector<std::vector<CycNumber>> nullspace(Matrix a);

// Coefficient matrix of a polynomial family: rows are the monomials of the
// union support (graded-lex descending), column j holds the coefficients of
// fs[j].
struct CoefficientMatrix {
    std::vector<Monomial> monomials;
    Matrix matrix;
};
CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& fs);

// Dimension of the span over Q(zeta_m).
size_t linear_rank(const std::vector<Polynomial>& fs);

// Coefficients mu with sum(mu_i fs_i) = 0, one basis vector per dependency.
std::vector<std::vector<CycNumber>> linear_relations(const std::vector<Polynomial>& fs);

// target = sum(c_i basis_i) if possible.
std::optional<std::vector<CycNumber>> express_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target);

}  // namespace abcpoly
