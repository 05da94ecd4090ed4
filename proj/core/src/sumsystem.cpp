#include "abcpoly/sumsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abcpoly {

VanishingSum::VanishingSum(std::vector<Polynomial> fs) : fs_(std::move(fs)) {
    const Context& ctx = fs_.front().context();
    Polynomial total = Polynomial::zero(ctx);
    std::set<unsigned> used;
    for (const auto& f : fs_) {
        if (f.is_zero()) throw error("vanishing sum members must be nonzero");
        total += f;
        if (f.is_constant()) ++k_;
        for (unsigned v : f.variables_used()) used.insert(v);
    }
    if (!total.is_zero()) {
        throw error("member sum is not zero, remainder " + total.to_string());
    }
    vars_used_.assign(used.begin(), used.end());
    d_ = linear_rank(fs_);
}

VanishingSum VanishingSum::build(std::vector<Polynomial> fs) {
    if (fs.size() < 2) throw error("a vanishing sum needs at least two members");
    return VanishingSum(std::move(fs));
}

long VanishingSum::max_degree() const {
    long d = 0;
    for (const auto& f : fs_) d = std::max(d, f.degree_checked());
    return d;
}

std::vector<Subsum> vanishing_subsums(const VanishingSum& sum, size_t limit) {
    size_t n = sum.size();
    if (n > limit) {
        throw limit_exceeded("subsum enumeration limit exceeded (n=" +
                             std::to_string(n) + ", limit=" + std::to_string(limit) +
                             ")");
    }
    const Context& ctx = sum.context();
    std::vector<unsigned long> vanishing_masks;
    unsigned long full = (1UL << n) - 1;
    // Partial sums by increasing popcount via simple enumeration; n is small.
    for (unsigned long mask = 1; mask < full; ++mask) {
        Polynomial s = Polynomial::zero(ctx);
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) s += sum.member(i);
        }
        if (s.is_zero()) vanishing_masks.push_back(mask);
    }
    std::vector<Subsum> out;
    for (unsigned long mask : vanishing_masks) {
        bool minimal = true;
        for (unsigned long other : vanishing_masks) {
            if (other != mask && (other & mask) == other) {
                minimal = false;
                break;
            }
        }
        Subsum s;
        s.minimal = minimal;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) s.indices.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

std::string indices_text(const std::vector<size_t>& idx) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) out << ",";
        out << (idx[i] + 1);
    }
    out << "}";
    return out.str();
}

}  // namespace

HypothesisReport hypothesis_check(const VanishingSum& sum, HypothesisMode mode,
                                  size_t limit) {
    HypothesisReport report;
    report.mode = mode;
    report.passed = true;

    if (mode == HypothesisMode::Pairwise) {
        for (size_t i = 0; i < sum.size(); ++i) {
            for (size_t j = i + 1; j < sum.size(); ++j) {
                Polynomial g = gcd(sum.member(i), sum.member(j));
                if (!g.is_constant()) {
                    report.passed = false;
                    report.witness = {i, j};
                    report.detail = "gcd of members " + indices_text(report.witness) +
                                    " is " + g.to_string();
                    return report;
                }
            }
        }
        report.detail = "all pairs coprime";
        return report;
    }

    long bound = 0;
    if (mode == HypothesisMode::DegBounded) {
        bound = sum.member(sum.size() - 1).degree_checked();
    }
    // All vanishing subsums, including the full sum.
    std::vector<std::vector<size_t>> subsets;
    for (const auto& s : vanishing_subsums(sum, limit)) subsets.push_back(s.indices);
    {
        std::vector<size_t> all(sum.size());
        for (size_t i = 0; i < sum.size(); ++i) all[i] = i;
        subsets.push_back(std::move(all));
    }
    for (const auto& idx : subsets) {
        std::vector<Polynomial> members;
        members.reserve(idx.size());
        for (size_t i : idx) members.push_back(sum.member(i));
        Polynomial g = gcd_many(members);
        bool ok = mode == HypothesisMode::StrictGcd ? g.is_constant()
                                                    : g.degree_checked() <= bound;
        if (!ok) {
            report.passed = false;
            report.witness = idx;
            report.detail = "vanishing subsum " + indices_text(idx) + " has gcd " +
                            g.to_string();
            if (mode == HypothesisMode::DegBounded) {
                report.detail += " of degree " + std::to_string(g.degree_checked()) +
                                 " > " + std::to_string(bound);
            }
            return report;
        }
    }
    report.detail = mode == HypothesisMode::StrictGcd
                        ? "every vanishing subsum has gcd 1"
                        : "every vanishing subsum gcd respects the degree bound";
    return report;
}

ConsolidationResult consolidate_constants(const VanishingSum& sum) {
    size_t n = sum.size();
    bool last_constant = sum.member(n - 1).is_constant();
    if (sum.constant_count() == 0 || last_constant) {
        return {sum, false, "no consolidation applicable"};
    }
    const Context& ctx = sum.context();
    Polynomial merged = sum.member(n - 1);
    std::vector<Polynomial> kept;
    size_t merged_count = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        if (sum.member(i).is_constant()) {
            merged += sum.member(i);
            ++merged_count;
        } else {
            kept.push_back(sum.member(i));
        }
    }
    (void)ctx;
    kept.push_back(merged);
    std::ostringstream note;
    note << "merged " << merged_count << " constant member(s) into the last member";
    return {VanishingSum::build(std::move(kept)), true, note.str()};
}

LiftedSystem lift(const VanishingSum& sum) {
    if (!sum.univariate()) {
        throw invalid_lift_input("lift requires a univariate system");
    }
    if (sum.size() < 2) throw invalid_lift_input("lift needs at least two members");
    Polynomial g = gcd_many(sum.members());
    if (!g.is_constant()) {
        throw invalid_lift_input("lift requires gcd 1, found " + g.to_string());
    }
    if (!vanishing_subsums(sum).empty()) {
        throw invalid_lift_input("lift requires no vanishing proper subsum");
    }

    size_t n = sum.size();
    size_t d = sum.span_dimension();
    const Context& base_ctx = sum.context();
    const CycFieldPtr& field = base_ctx.field;

    // Lexicographically first independent index subset of size d (greedy).
    std::vector<size_t> basis_idx, rest_idx;
    std::vector<Polynomial> basis_polys;
    for (size_t i = 0; i < n; ++i) {
        if (basis_idx.size() < d) {
            basis_polys.push_back(sum.member(i));
            if (linear_rank(basis_polys) == basis_polys.size()) {
                basis_idx.push_back(i);
                continue;
            }
            basis_polys.pop_back();
        }
        rest_idx.push_back(i);
    }

    LiftedSystem out;
    out.dim = d;
    out.permutation.reserve(n);
    for (size_t i : basis_idx) out.permutation.push_back(i);
    for (size_t i : rest_idx) out.permutation.push_back(i);
    out.tilde.reserve(n);
    for (size_t i : out.permutation) out.tilde.push_back(sum.member(i));

    // lambda rows: tilde[d + j] = sum_i lambda[j][i] * tilde[i].
    for (size_t j = d; j < n; ++j) {
        auto mu = express_in_span(basis_polys, out.tilde[j]);
        if (!mu) throw error("basis expression failed unexpectedly");
        out.lambda.push_back(std::move(*mu));
    }

    // Context [y, z_{d+1}, ..., z_n]; the base variable keeps its name.
    std::string y_name = base_ctx.vars->size() > 0
                             ? base_ctx.vars->name(sum.main_variable())
                             : "y";
    std::vector<std::string> names{y_name};
    for (size_t j = d; j < n; ++j) {
        names.push_back("z" + std::to_string(j + 1));
    }
    out.lifted_context = Context{field, std::make_shared<VarSet>(std::move(names))};
    out.y_var = 0;
    for (size_t j = 0; j < n - d; ++j) {
        out.z_vars.push_back(static_cast<unsigned>(1 + j));
    }

    // Map tilde members onto the y variable of the lifted context.
    std::vector<unsigned> var_map(base_ctx.var_count(), 0u);
    if (!base_ctx.vars->names().empty()) var_map[sum.main_variable()] = 0;
    std::vector<Polynomial> tilde_mapped;
    tilde_mapped.reserve(n);
    for (const auto& f : out.tilde) {
        tilde_mapped.push_back(f.map_into(out.lifted_context, var_map));
    }

    for (size_t i = 0; i < d; ++i) {
        Polynomial form = Polynomial::zero(out.lifted_context);
        for (size_t j = 0; j < n - d; ++j) {
            form += Polynomial::variable(out.lifted_context, out.z_vars[j])
                        .scale(out.lambda[j][i]);
        }
        out.lifted.push_back(form * tilde_mapped[i]);
    }
    for (size_t j = 0; j < n - d; ++j) {
        out.lifted.push_back(
            -(Polynomial::variable(out.lifted_context, out.z_vars[j]) *
              tilde_mapped[d + j]));
    }

    // Internal consistency: the lifted members must sum to zero exactly.
    Polynomial total = Polynomial::zero(out.lifted_context);
    for (const auto& f : out.lifted) total += f;
    if (!total.is_zero()) throw error("lift lost the vanishing sum");
    return out;
}

ConnectivityWitness connectivity_witness(const LiftedSystem& lifted) {
    size_t n = lifted.tilde.size();
    size_t d = lifted.dim;
    ConnectivityWitness out;
    for (size_t j = 0; j < n - d; ++j) {
        for (size_t i = 0; i < d; ++i) {
            if (!lifted.lambda[j][i].is_zero()) {
                out.edges.emplace_back(d + j, i);
            }
        }
    }
    // Union-find over n vertices.
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : out.edges) {
        parent[find(a)] = find(b);
    }
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (auto& [root, members] : groups) out.components.push_back(members);
    out.connected = out.components.size() == 1;

    out.nullspace_basis = linear_relations(lifted.lifted);
    out.nullspace_is_all_ones_line = false;
    if (out.nullspace_basis.size() == 1) {
        const auto& v = out.nullspace_basis.front();
        const CycNumber& first = v.front();
        if (!first.is_zero()) {
            out.nullspace_is_all_ones_line =
                std::all_of(v.begin(), v.end(),
                            [&](const CycNumber& c) { return c == first; });
        }
    }
    return out;
}

DivisorChain divisor_chain(const std::vector<Polynomial>& fs, size_t limit) {
    size_t n = fs.size();
    if (n == 0) throw error("divisor chain of an empty family");
    if (n > limit) {
        throw limit_exceeded("divisor chain limit exceeded (n=" + std::to_string(n) +
                             ", limit=" + std::to_string(limit) + ")");
    }
    for (const auto& f : fs) {
        if (f.is_zero()) throw error("divisor chain members must be nonzero");
    }
    const Context& ctx = fs.front().context();
    DivisorChain out;
    for (size_t size = 1; size <= n; ++size) {
        // Fold gcd over lcms of all `size`-subsets.
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        Polynomial h = Polynomial::zero(ctx);
        bool first = true;
        while (true) {
            Polynomial l = normalize_unit(fs[idx[0]]);
            for (size_t i = 1; i < size; ++i) l = lcm(l, fs[idx[i]]);
            h = first ? l : gcd(h, l);
            first = false;
            // Next combination.
            size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + n - size) {
                    ++idx[i];
                    for (size_t t = i + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
            if (h.is_constant()) break;  // gcd can only stay 1
        }
        out.h.push_back(normalize_unit(h));
    }
    return out;
}

std::vector<ComponentCount> mp_counts(const std::vector<Polynomial>& fs) {
    CoprimeBasis basis = coprime_basis(fs);
    std::vector<ComponentCount> out;
    for (size_t b = 0; b < basis.components.size(); ++b) {
        size_t m_b = 0;
        for (size_t i = 0; i < fs.size(); ++i) {
            if (basis.valuations[i][b] == 0) ++m_b;
        }
        out.push_back({basis.components[b], basis.components[b].degree_checked(), m_b});
    }
    return out;
}

}  // namespace abcpoly
