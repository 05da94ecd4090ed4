#include "abcpoly/linalg.hpp"

#include <algorithm>

namespace abcpoly {

namespace {

// In-place forward elimination to row echelon form; returns pivot columns.
// Companion columns in `rhs` (may be empty) receive the same row operations.
std::vector<size_t> echelon(Matrix& m, std::vector<CycNumber>* rhs) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
            if (rhs) std::swap((*rhs)[sel], (*rhs)[row]);
        }
        CycNumber inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        if (rhs) (*rhs)[row] *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycNumber factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) -= factor * m.at(row, j);
            }
            if (rhs) (*rhs)[i] -= factor * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(Matrix m) {
    return echelon(m, nullptr).size();
}

std::optional<std::vector<CycNumber>> solve(Matrix a, std::vector<CycNumber> b) {
    if (b.size() != a.rows()) throw error("solve: shape mismatch");
    std::vector<size_t> pivots = echelon(a, &b);
    // Consistency: zero rows must have zero rhs.
    for (size_t i = pivots.size(); i < a.rows(); ++i) {
        if (!b[i].is_zero()) return std::nullopt;
    }
    std::vector<CycNumber> x(a.cols(), CycNumber::zero(a.field()));
    for (size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = b[r];
    }
    return x;
}

std::vector<std::vector<CycNumber>> nullspace(Matrix a) {
    std::vector<size_t> pivots = echelon(a, nullptr);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycNumber>> basis;
    for (size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<CycNumber> v(a.cols(), CycNumber::zero(a.field()));
        v[free_col] = CycNumber::one(a.field());
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a.at(r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw error("coefficient matrix of an empty family");
    const Context& ctx = fs.front().context();
    std::vector<Monomial> monomials;
    {
        std::map<Monomial, bool, GradedLexGreater> support;
        for (const auto& f : fs) {
            if (!f.context().compatible_with(ctx)) {
                throw incompatible_context("coefficient matrix across contexts");
            }
            for (const auto& [m, c] : f.terms()) support.emplace(m, true);
        }
        monomials.reserve(support.size());
        for (const auto& [m, unused] : support) monomials.push_back(m);
    }
    Matrix matrix(monomials.size(), fs.size(), ctx.field);
    for (size_t j = 0; j < fs.size(); ++j) {
        size_t i = 0;
        for (const auto& m : monomials) {
            matrix.at(i, j) = fs[j].coefficient(m);
            ++i;
        }
    }
    return {std::move(monomials), std::move(matrix)};
}

size_t linear_rank(const std::vector<Polynomial>& fs) {
    if (fs.empty()) return 0;
    return rank(coefficient_matrix(fs).matrix);
}

std::vector<std::vector<CycNumber>> linear_relations(const std::vector<Polynomial>& fs) {
    if (fs.empty()) return {};
    return nullspace(coefficient_matrix(fs).matrix);
}

std::optional<std::vector<CycNumber>> express_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target) {
    if (basis.empty()) throw error("express_in_span: empty basis");
    CoefficientMatrix cm = coefficient_matrix(basis);
    // Target may have support outside the basis support; extend rows.
    std::vector<Monomial> extra;
    for (const auto& [m, c] : target.terms()) {
        if (std::find(cm.monomials.begin(), cm.monomials.end(), m) ==
            cm.monomials.end()) {
            extra.push_back(m);
        }
    }
    const Context& ctx = basis.front().context();
    Matrix a(cm.monomials.size() + extra.size(), basis.size(), ctx.field);
    std::vector<CycNumber> b;
    b.reserve(a.rows());
    for (size_t i = 0; i < cm.monomials.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) a.at(i, j) = cm.matrix.at(i, j);
        b.push_back(target.coefficient(cm.monomials[i]));
    }
    for (size_t i = 0; i < extra.size(); ++i) {
        b.push_back(target.coefficient(extra[i]));
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    // solve() found a candidate; confirm it reproduces the target exactly.
    Polynomial check = Polynomial::zero(ctx);
    for (size_t j = 0; j < basis.size(); ++j) check += basis[j].scale((*x)[j]);
    if (!(check == target)) return std::nullopt;
    return x;
}

}  // namespace abcpoly
