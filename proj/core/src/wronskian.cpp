#include "abcpoly/wronskian.hpp"

#include <algorithm>
#include <sstream>

#include "abcpoly/polyops.hpp"

namespace abcpoly {

DeltaOperator DeltaOperator::then_partial(unsigned var) const {
    DeltaOperator d = *this;
    d.factors_.insert(
        std::upper_bound(d.factors_.begin(), d.factors_.end(), var), var);
    return d;
}

unsigned DeltaOperator::count(unsigned var) const {
    return static_cast<unsigned>(
        std::count(factors_.begin(), factors_.end(), var));
}

Polynomial DeltaOperator::apply(const Polynomial& f) const {
    Polynomial out = f;
    for (unsigned v : factors_) out = out.derivative(v);
    return out;
}

std::string DeltaOperator::to_string(const VarSet& vars) const {
    if (factors_.empty()) return "id";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < factors_.size()) {
        size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!first) out << " ";
        out << "d/d" << vars.name(factors_[i]);
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

namespace {

Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m,
                        std::vector<size_t> cols, size_t row,
                        const Context& ctx) {
    if (cols.size() == 1) return m[row][cols[0]];
    Polynomial acc = Polynomial::zero(ctx);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t) {
            if (t != k) rest.push_back(cols[t]);
        }
        Polynomial minor = cofactor_det(m, std::move(rest), row + 1, ctx);
        Polynomial contrib = entry * minor;
        acc += (k % 2 == 0) ? contrib : -contrib;
    }
    return acc;
}

Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m, const Context& ctx) {
    size_t n = m.size();
    int sign = 1;
    Polynomial prev = Polynomial::constant(ctx, 1L);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial::zero(ctx);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = Polynomial::zero(ctx);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m) {
    if (m.empty()) throw error("determinant of an empty matrix");
    size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw error("determinant requires a square matrix");
    }
    const Context& ctx = m[0][0].context();
    if (n <= 4) {
        std::vector<size_t> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = i;
        return cofactor_det(m, std::move(cols), 0, ctx);
    }
    return bareiss_det(std::move(m), ctx);
}

Polynomial classical_wronskian(const std::vector<Polynomial>& fs, unsigned var) {
    if (fs.empty()) throw error("Wronskian of an empty family");
    const Context& ctx = fs.front().context();
    for (const auto& f : fs) {
        if (!f.uses_only(var)) {
            throw error("classical Wronskian requires univariate inputs");
        }
    }
    size_t n = fs.size();
    std::vector<std::vector<Polynomial>> m;
    m.reserve(n);
    m.push_back(fs);
    for (size_t i = 1; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (const auto& f : m.back()) row.push_back(f.derivative(var));
        m.push_back(std::move(row));
    }
    (void)ctx;
    return poly_determinant(std::move(m));
}

Polynomial generalized_wronskian(const std::vector<Polynomial>& fs,
                                 const std::vector<DeltaOperator>& deltas) {
    if (fs.size() != deltas.size()) {
        throw error("generalized Wronskian needs one operator per function");
    }
    if (fs.empty()) throw error("Wronskian of an empty family");
    size_t n = fs.size();
    std::vector<std::vector<Polynomial>> m(n);
    for (size_t i = 0; i < n; ++i) {
        m[i].reserve(n);
        for (size_t j = 0; j < n; ++j) m[i].push_back(deltas[i].apply(fs[j]));
    }
    return poly_determinant(std::move(m));
}

namespace {

// Working entry for the operator construction: the coefficient polynomial of
// each z variable (each univariate in y).
struct ZEntry {
    std::vector<Polynomial> parts;

    bool all_zero() const {
        return std::all_of(parts.begin(), parts.end(),
                           [](const Polynomial& p) { return p.is_zero(); });
    }
};

ZEntry decompose_z_linear(const Polynomial& f, unsigned y_var,
                          const std::vector<unsigned>& z_vars) {
    const Context& ctx = f.context();
    ZEntry entry;
    entry.parts.assign(z_vars.size(), Polynomial::zero(ctx));
    for (const auto& [m, c] : f.terms()) {
        size_t z_slot = z_vars.size();
        unsigned z_total = 0;
        for (size_t t = 0; t < z_vars.size(); ++t) {
            unsigned e = m.exponent(z_vars[t]);
            z_total += e;
            if (e > 0) z_slot = t;
        }
        if (z_total != 1) {
            throw error("function is not homogeneous linear in the z variables");
        }
        std::vector<unsigned> rest = m.exponents();
        rest[z_vars[z_slot]] = 0;
        Monomial my(std::move(rest));
        for (size_t i = 0; i < my.exponents().size(); ++i) {
            if (my.exponents()[i] > 0 && i != y_var) {
                throw error("function mixes variables beyond the (y, z) shape");
            }
        }
        entry.parts[z_slot] += Polynomial::term(ctx, my, c);
    }
    return entry;
}

std::vector<DeltaOperator> construct_recursive(std::vector<ZEntry> entries,
                                               unsigned y_var,
                                               const std::vector<unsigned>& z_vars) {
    if (entries.empty()) return {};
    for (const auto& e : entries) {
        if (e.all_zero()) {
            throw not_independent("zero member encountered during operator selection");
        }
    }
    // Smallest z index carried by the last function.
    size_t j = 0;
    while (entries.back().parts[j].is_zero()) ++j;

    while (true) {
        std::vector<ZEntry> zero_block, live_block;
        for (auto& e : entries) {
            (e.parts[j].is_zero() ? zero_block : live_block).push_back(std::move(e));
        }
        std::vector<Polynomial> g;
        g.reserve(live_block.size());
        for (const auto& e : live_block) g.push_back(e.parts[j]);

        if (linear_rank(g) == g.size()) {
            // The derivative images are independent: settle the live block with
            // the chain d/dz_j, d/dy d/dz_j, ... and recurse on the zero block.
            std::vector<DeltaOperator> deltas =
                construct_recursive(std::move(zero_block), y_var, z_vars);
            DeltaOperator op = DeltaOperator::partial(z_vars[j]);
            for (size_t i = 0; i < live_block.size(); ++i) {
                deltas.push_back(op);
                op = op.then_partial(y_var);
            }
            return deltas;
        }

        // Dependent: express the earliest expressible g_s through later ones
        // and subtract the matching combination from the function itself.
        bool replaced = false;
        for (size_t s = 0; s + 1 < live_block.size() && !replaced; ++s) {
            std::vector<Polynomial> later(g.begin() + s + 1, g.end());
            auto mu = express_in_span(later, g[s]);
            if (!mu) continue;
            for (size_t t = 0; t < z_vars.size(); ++t) {
                for (size_t i = 0; i < later.size(); ++i) {
                    live_block[s].parts[t] -=
                        live_block[s + 1 + i].parts[t].scale((*mu)[i]);
                }
            }
            if (live_block[s].all_zero()) {
                throw not_independent("reduction produced the zero function");
            }
            replaced = true;
        }
        if (!replaced) {
            throw not_independent("dependent family: no admissible reduction");
        }
        entries.clear();
        for (auto& e : zero_block) entries.push_back(std::move(e));
        for (auto& e : live_block) entries.push_back(std::move(e));
    }
}

}  // namespace

std::vector<DeltaOperator> construct_delta(const std::vector<Polynomial>& fs,
                                           unsigned y_var,
                                           const std::vector<unsigned>& z_vars) {
    if (z_vars.empty()) throw error("operator selection needs z variables");
    std::vector<ZEntry> entries;
    entries.reserve(fs.size());
    for (const auto& f : fs) {
        entries.push_back(decompose_z_linear(f, y_var, z_vars));
    }
    return construct_recursive(std::move(entries), y_var, z_vars);
}

bool delta_shape_ok(const std::vector<DeltaOperator>& deltas, unsigned y_var,
                    const std::vector<unsigned>& z_vars) {
    auto is_z = [&](unsigned v) {
        return std::find(z_vars.begin(), z_vars.end(), v) != z_vars.end();
    };
    for (size_t i = 0; i < deltas.size(); ++i) {
        const auto& f = deltas[i].factors();
        if (f.size() == 1 && is_z(f[0])) continue;
        if (i == 0) return false;
        // Must equal the predecessor extended by one d/dy.
        if (deltas[i].order() != deltas[i - 1].order() + 1) return false;
        if (!(deltas[i - 1].then_partial(y_var) == deltas[i])) return false;
    }
    return true;
}

}  // namespace abcpoly
