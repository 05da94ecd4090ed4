#include "abcpoly/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace abcpoly {

bool BoundReport::all_required_hold() const {
    if (!applicable) return false;
    for (const auto& e : entries) {
        if (e.required && !e.holds) return false;
    }
    for (const auto& p : post_conditions) {
        if (!p.passed) return false;
    }
    return true;
}

bool BoundReport::any_equality() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const BoundEntry& e) { return e.equality; });
}

Rational binomial2(long a) {
    if (a < 2) return Rational(0);
    return Rational(a) * Rational(a - 1) / 2;
}

long max_member_degree(const VanishingSum& sum) { return sum.max_degree(); }

long sum_radical_degrees(const std::vector<Polynomial>& fs) {
    long total = 0;
    for (const auto& f : fs) total += radical(f).is_constant() ? 0 : radical(f).degree_checked();
    return total;
}

Polynomial product_of(const std::vector<Polynomial>& fs) {
    Polynomial acc = Polynomial::constant(fs.front().context(), 1L);
    for (const auto& f : fs) acc = acc * f;
    return acc;
}

namespace {

long rdeg(const Polynomial& f) {
    Polynomial r = radical(f);
    return r.is_constant() ? 0 : r.degree_checked();
}

// r_e with the convention r_e = 0 for e <= 0 (the 0-th power-free part is 1).
long rdeg_e(const Polynomial& f, long e) {
    if (e <= 0) return 0;
    if (f.is_constant()) return 0;
    return power_free_part(f, static_cast<unsigned>(e)).degree_checked();
}

BoundEntry make_entry(std::string label, std::string parameter, Rational lhs,
                      Rational rhs, bool required = true, std::string note = "") {
    BoundEntry e;
    e.label = std::move(label);
    e.parameter = std::move(parameter);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.holds = e.lhs <= e.rhs;
    e.equality = e.lhs == e.rhs;
    e.required = required;
    e.note = std::move(note);
    return e;
}

void add_hypothesis(BoundReport& report, const std::string& name, bool passed,
                    const std::string& witness = "") {
    report.hypotheses.push_back({name, passed, passed ? "" : witness});
}

bool finish_hypotheses(BoundReport& report) {
    report.applicable = std::all_of(
        report.hypotheses.begin(), report.hypotheses.end(),
        [](const HypothesisCheckEntry& h) { return h.passed; });
    return report.applicable;
}

void add_mode_hypothesis(BoundReport& report, const VanishingSum& sum,
                         HypothesisMode mode, const std::string& name) {
    HypothesisReport h = hypothesis_check(sum, mode);
    add_hypothesis(report, name, h.passed, h.detail);
}

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

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

BoundReport check_mason3(const VanishingSum& sum) {
    BoundReport report;
    report.theorem = "mason3";
    add_hypothesis(report, "n=3", sum.size() == 3,
                   "n=" + std::to_string(sum.size()));
    add_hypothesis(report, "univariate", sum.univariate(),
                   "multivariate input");
    add_hypothesis(report, "not-all-constant", !sum.all_constant(),
                   "all members constant");
    if (sum.size() == 3) {
        add_mode_hypothesis(report, sum, HypothesisMode::Pairwise, "pairwise-coprime");
    }
    if (!finish_hypotheses(report)) return report;

    long lhs = max_member_degree(sum);
    long rhs = rdeg(product_of(sum.members())) - 1;
    report.entries.push_back(
        make_entry("mason3", "", Rational(lhs), Rational(rhs)));
    return report;
}

BoundReport check_masons(const VanishingSum& sum) {
    BoundReport report;
    report.theorem = "masons";
    size_t n = sum.size();
    add_hypothesis(report, "n>=3", n >= 3, "n=" + std::to_string(n));
    add_hypothesis(report, "not-all-constant", !sum.all_constant(),
                   "all members constant");
    add_mode_hypothesis(report, sum, HypothesisMode::Pairwise, "pairwise-coprime");
    if (!finish_hypotheses(report)) return report;

    long lhs = max_member_degree(sum);
    long r_prod = rdeg(product_of(sum.members()));
    size_t k = sum.constant_count();
    report.entries.push_back(make_entry(
        "masons", "", Rational(lhs), Rational(n - 2) * Rational(r_prod - 1)));
    if (k <= 1) {
        report.entries.push_back(make_entry(
            "masons-bt", "k<=1", Rational(lhs),
            Rational(n - 2) * (Rational(r_prod) - Rational(n - 1) / 2)));
    }
    if (k >= 1) {
        report.entries.push_back(make_entry(
            "masons-bt-k", "k=" + std::to_string(k), Rational(lhs),
            Rational(static_cast<long>(n - k) - 1) *
                (Rational(r_prod) - Rational(static_cast<long>(n - k)) / 2)));
    }
    return report;
}

namespace {

void masons2_hypotheses(BoundReport& report, const VanishingSum& sum) {
    add_hypothesis(report, "n>=3", sum.size() >= 3,
                   "n=" + std::to_string(sum.size()));
    add_hypothesis(report, "not-all-constant", !sum.all_constant(),
                   "all members constant");
    add_mode_hypothesis(report, sum, HypothesisMode::StrictGcd,
                        "subsum-gcd-1");
}

}  // namespace

BoundReport check_masons2(const VanishingSum& sum) {
    BoundReport report;
    report.theorem = "masons2";
    masons2_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;
    long lhs = max_member_degree(sum);
    long r_sum = sum_radical_degrees(sum.members());
    report.entries.push_back(
        make_entry("kk", "", Rational(lhs),
                   Rational(static_cast<long>(sum.size()) - 2) * Rational(r_sum - 1)));
    return report;
}

BoundReport check_masons2a(const VanishingSum& sum) {
    BoundReport report;
    report.theorem = "masons2a";
    masons2_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;
    long n = static_cast<long>(sum.size());
    long lhs = max_member_degree(sum);
    long r_prod = rdeg(product_of(sum.members()));
    report.entries.push_back(make_entry(
        "kka", "", Rational(lhs),
        Rational(n - 1) * Rational(n - 2) / 2 * Rational(r_prod - 1)));
    return report;
}

ReductionResult reduce_to_univariate(const VanishingSum& sum, Prng& rng,
                                     unsigned budget) {
    const Context& ctx = sum.context();
    size_t l = ctx.var_count();
    size_t n = sum.size();

    if (sum.univariate()) {
        unsigned main = sum.main_variable();
        std::string name = l > 0 ? ctx.vars->name(main) : "y";
        Context target = Context{ctx.field, std::make_shared<VarSet>(
                                                std::vector<std::string>{name})};
        std::vector<unsigned> var_map(l, 0u);
        std::vector<Polynomial> mapped;
        for (const auto& f : sum.members()) {
            mapped.push_back(f.map_into(target, var_map));
        }
        ReductionResult out{std::vector<Rational>(l, Rational(0)),
                            std::vector<Rational>(l, Rational(0)),
                            VanishingSum::build(std::move(mapped)), 0,
                            {"identity reduction (already univariate)"}};
        if (l > 0) out.p[main] = 1;
        return out;
    }

    // The common divisor's degree must survive the substitution; for the
    // intended gcd-1 inputs this is the plain "gcd stays 1" check.
    Polynomial g_all = gcd_many(sum.members());
    long gcd_deg = g_all.is_constant() ? 0 : g_all.degree_checked();
    if (!vanishing_subsums(sum).empty()) {
        throw invalid_lift_input("reduction requires no vanishing proper subsum");
    }

    // Leading forms of every nonempty proper subsum (degree witnesses).
    std::vector<Polynomial> subsums;
    std::vector<long> sub_degs;
    unsigned long full = (1UL << n) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        Polynomial s = Polynomial::zero(ctx);
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) s += sum.member(i);
        }
        sub_degs.push_back(s.degree_checked());
        subsums.push_back(std::move(s));
    }

    Context target =
        Context{ctx.field, std::make_shared<VarSet>(std::vector<std::string>{"y"})};

    unsigned attempts = 0;
    std::vector<std::string> trace;
    while (attempts < budget) {
        ++attempts;
        std::vector<Rational> p(l), q(l);
        std::vector<CycNumber> p_point;
        for (size_t t = 0; t < l; ++t) {
            p[t] = Rational(rng.uniform(-9, 9));
            p_point.push_back(CycNumber::from_rational(ctx.field, p[t]));
        }
        bool leading_ok = true;
        for (const auto& s : subsums) {
            if (!s.leading_form().evaluate(p_point).is_zero()) continue;
            leading_ok = false;
            break;
        }
        if (!leading_ok) {
            trace.push_back("attempt " + std::to_string(attempts) +
                            ": a subsum leading form vanished at p, retrying");
            continue;
        }
        for (size_t t = 0; t < l; ++t) q[t] = Rational(rng.uniform(-9, 9));

        std::vector<Polynomial> reduced;
        reduced.reserve(n);
        bool ok = true;
        for (const auto& f : sum.members()) {
            Polynomial t = f.substitute_affine_line(target, p, q);
            if (t.is_zero() || t.degree_checked() != f.degree_checked()) {
                ok = false;
                break;
            }
            reduced.push_back(std::move(t));
        }
        if (ok) {
            // Every proper subsum must keep its degree (hence stay nonzero).
            size_t si = 0;
            for (unsigned long mask = 1; mask < full && ok; ++mask, ++si) {
                Polynomial s = Polynomial::zero(target);
                for (size_t i = 0; i < n; ++i) {
                    if (mask & (1UL << i)) s += reduced[i];
                }
                if (s.is_zero() || s.degree_checked() != sub_degs[si]) ok = false;
            }
        }
        if (ok) {
            Polynomial g = gcd_many(reduced);
            long g_deg = g.is_constant() ? 0 : g.degree_checked();
            if (g_deg != gcd_deg) {
                ok = false;
                trace.push_back("attempt " + std::to_string(attempts) +
                                ": reduced gcd degree changed, retrying");
            }
        }
        if (!ok) continue;

        ReductionResult out{std::move(p), std::move(q),
                            VanishingSum::build(std::move(reduced)),
                            attempts - 1, std::move(trace)};
        std::ostringstream note;
        note << "substitution p=(";
        for (size_t t = 0; t < l; ++t) {
            if (t) note << ",";
            note << rational_text(out.p[t]);
        }
        note << "), q=(";
        for (size_t t = 0; t < l; ++t) {
            if (t) note << ",";
            note << rational_text(out.q[t]);
        }
        note << "), retries=" << out.retries;
        out.trace.push_back(note.str());
        return out;
    }
    throw budget_exhausted("reduction retry budget exhausted after " +
                           std::to_string(budget) + " attempts");
}

PipelinePreparation prepare_for_pipeline(const VanishingSum& sum, Prng& rng) {
    PipelinePreparation prep{sum, {}, std::nullopt, {}};

    auto subsums = vanishing_subsums(prep.system);
    if (!subsums.empty()) {
        // Maximal-degree member, smallest index.
        size_t m_star = 0;
        long best = -1;
        for (size_t i = 0; i < prep.system.size(); ++i) {
            long d = prep.system.member(i).degree_checked();
            if (d > best) {
                best = d;
                m_star = i;
            }
        }
        // Minimal vanishing subsum containing m_star (the minimal one has no
        // internal vanishing subsum).
        const std::vector<size_t>* chosen = nullptr;
        for (const auto& s : subsums) {
            if (std::find(s.indices.begin(), s.indices.end(), m_star) ==
                s.indices.end()) {
                continue;
            }
            if (!chosen || s.indices.size() < chosen->size() ||
                (s.indices.size() == chosen->size() && s.indices < *chosen)) {
                chosen = &s.indices;
            }
        }
        if (chosen) {
            std::vector<Polynomial> members;
            for (size_t i : *chosen) members.push_back(prep.system.member(i));
            prep.restricted_indices = *chosen;
            prep.trace.push_back("restricted to the minimal vanishing subsum " +
                                 indices_text(*chosen) +
                                 " containing the maximal-degree member");
            prep.system = VanishingSum::build(std::move(members));
        }
    }

    if (!prep.system.univariate()) {
        ReductionResult red = reduce_to_univariate(prep.system, rng);
        prep.trace.insert(prep.trace.end(), red.trace.begin(), red.trace.end());
        prep.system = red.reduced;
        prep.reduction = std::move(red);
    }
    return prep;
}

RhoSigmaResult compute_rho_sigma(const VanishingSum& sum) {
    if (sum.span_dimension() < 2) {
        throw invalid_lift_input(
            "operator pipeline needs span dimension >= 2 (not all members similar)");
    }
    LiftedSystem lifted = lift(sum);
    size_t n = sum.size();
    std::vector<Polynomial> head(lifted.lifted.begin(), lifted.lifted.end() - 1);
    std::vector<DeltaOperator> deltas =
        construct_delta(head, lifted.y_var, lifted.z_vars);
    Polynomial wronskian = generalized_wronskian(head, deltas);
    if (wronskian.is_zero()) {
        throw error("constructed operators left a vanishing Wronskian");
    }
    size_t rho = 0, sigma = 0, order_one = 0;
    for (const auto& d : deltas) {
        rho = std::max<size_t>(rho, d.order());
        sigma += d.order() - 1;
        if (d.order() == 1) ++order_one;
    }
    size_t d = sum.span_dimension();
    if (!(2 <= rho && rho <= d)) {
        throw error("constructed rho out of range");
    }
    if (!(rho * (rho - 1) / 2 <= sigma && sigma <= d * (d - 1) / 2)) {
        throw error("constructed sigma out of range");
    }
    if (order_one < n - d) {
        throw error("fewer order-1 operators than expected");
    }
    return RhoSigmaResult{rho,    sigma,     std::move(deltas),
                          std::move(lifted), std::move(wronskian), order_one};
}

namespace {

// Constructive rho/sigma for a (possibly multivariate, possibly reducible)
// admissible system; reports the preparation in `trace`.
struct PipelineRun {
    PipelinePreparation prep;
    RhoSigmaResult rs;
};

PipelineRun run_pipeline(const VanishingSum& sum, const VerifyOptions& opt) {
    Prng rng(opt.seed);
    PipelinePreparation prep = prepare_for_pipeline(sum, rng);
    RhoSigmaResult rs = compute_rho_sigma(prep.system);
    return PipelineRun{std::move(prep), std::move(rs)};
}

void describe_pipeline(BoundReport& report, const PipelineRun& run) {
    for (const auto& t : run.prep.trace) report.trace.push_back(t);
    std::ostringstream ops;
    ops << "operators:";
    for (const auto& d : run.rs.deltas) {
        ops << " [" << d.to_string(*run.rs.lifted.lifted_context.vars) << "]";
    }
    report.trace.push_back(ops.str());
    report.trace.push_back(
        "rho=" + std::to_string(run.rs.rho) + ", sigma=" + std::to_string(run.rs.sigma) +
        ", wronskian degree=" + std::to_string(run.rs.wronskian.degree_checked()));
}

}  // namespace

BoundReport check_masons3(const VanishingSum& sum, const VerifyOptions& opt) {
    BoundReport report;
    report.theorem = "masons3";
    masons2_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;

    long n = static_cast<long>(sum.size());
    long k = static_cast<long>(sum.constant_count());
    long d = static_cast<long>(sum.span_dimension());
    long lhs = max_member_degree(sum);

    std::vector<long> r1(sum.size());
    long r1_total = 0;
    for (size_t i = 0; i < sum.size(); ++i) {
        r1[i] = rdeg(sum.member(i));
        r1_total += r1[i];
    }

    if (opt.constructive) {
        PipelineRun run = run_pipeline(sum, opt);
        describe_pipeline(report, run);
        long rho = static_cast<long>(run.rs.rho);
        long rhs = -1;
        {
            long total = 0;
            for (const auto& f : sum.members()) total += rdeg_e(f, rho - 1);
            rhs = total;
        }
        report.entries.push_back(make_entry(
            "klhy", "rho=" + std::to_string(rho), Rational(lhs),
            Rational(rhs) - binomial2(rho)));
    }

    // Existence sweep over all admissible rho.
    {
        Rational best(-1);
        long best_rho = -1;
        for (long rho = 2; rho <= d; ++rho) {
            long total = 0;
            for (const auto& f : sum.members()) total += rdeg_e(f, rho - 1);
            Rational rhs = Rational(total) - binomial2(rho);
            report.entries.push_back(make_entry("klhy-sweep",
                                                "rho=" + std::to_string(rho),
                                                Rational(lhs), rhs, false));
            if (best_rho < 0 || rhs > best) {
                best = rhs;
                best_rho = rho;
            }
        }
        if (best_rho >= 0) {
            report.entries.push_back(make_entry(
                "klhy-exists", "rho*=" + std::to_string(best_rho), Rational(lhs),
                best, true, "largest right-hand side over 2 <= rho <= d"));
        }
    }

    // (kl) sweep over the theorem's d' range, with the range-clause label.
    long lo = d, hi = n - k + 1;
    if (lo > hi) {
        report.trace.push_back("d' range empty: d > n-k+1");
    }
    auto kl_rhs = [&](long dp) -> Rational {
        return Rational(dp - 1) * (Rational(r1_total) - Rational(dp) / 2);
    };
    for (long dp = lo; dp <= hi; ++dp) {
        std::string note = dp == n - k + 1 ? "range clause: d'=n-k+1 endpoint"
                                           : "range clause: d'<=n-k";
        report.entries.push_back(make_entry("kl", "d'=" + std::to_string(dp),
                                            Rational(lhs), kl_rhs(dp), true,
                                            note));
    }
    if (opt.dprime_range) {
        for (long dp = opt.dprime_range->first; dp <= opt.dprime_range->second;
             ++dp) {
            if (dp >= lo && dp <= hi) continue;  // already reported
            if (dp < 2) continue;
            report.entries.push_back(make_entry(
                "kl", "d'=" + std::to_string(dp), Rational(lhs), kl_rhs(dp),
                false, "outside theorem range (requested)"));
        }
    }
    return report;
}

BoundReport check_masons3a(const VanishingSum& sum, const VerifyOptions& opt) {
    BoundReport report;
    report.theorem = "masons3a";
    masons2_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;

    long d = static_cast<long>(sum.span_dimension());
    long lhs = max_member_degree(sum);
    Polynomial prod = product_of(sum.members());

    if (opt.constructive) {
        PipelineRun run = run_pipeline(sum, opt);
        describe_pipeline(report, run);
        long sigma = static_cast<long>(run.rs.sigma);
        report.entries.push_back(make_entry(
            "klahy", "sigma=" + std::to_string(sigma), Rational(lhs),
            Rational(rdeg_e(prod, sigma)) - Rational(sigma)));
    }

    // Existence sweep over all admissible sigma.
    {
        long sigma_max = d * (d - 1) / 2;
        Rational best(-1);
        long best_sigma = -1;
        for (long sigma = 1; sigma <= sigma_max; ++sigma) {
            Rational rhs = Rational(rdeg_e(prod, sigma)) - Rational(sigma);
            report.entries.push_back(make_entry("klahy-sweep",
                                                "sigma=" + std::to_string(sigma),
                                                Rational(lhs), rhs, false));
            if (best_sigma < 0 || rhs > best) {
                best = rhs;
                best_sigma = sigma;
            }
        }
        if (best_sigma >= 0) {
            report.entries.push_back(make_entry(
                "klahy-exists", "sigma*=" + std::to_string(best_sigma),
                Rational(lhs), best, true,
                "largest right-hand side over 1 <= sigma <= d(d-1)/2"));
        }
    }

    // (kla) at d' = d; the right-hand side is nondecreasing in d'.
    long r_prod = rdeg(prod);
    report.entries.push_back(make_entry(
        "kla", "d'=" + std::to_string(d), Rational(lhs),
        Rational(d) * Rational(d - 1) / 2 * Rational(r_prod - 1)));
    return report;
}

BoundReport check_fermat_catalan(const std::vector<Polynomial>& gs,
                                 const std::vector<unsigned>& es) {
    BoundReport report;
    report.theorem = "fermat-catalan";
    if (gs.size() != es.size() || gs.empty()) {
        add_hypothesis(report, "arity", false, "one exponent per base required");
        finish_hypotheses(report);
        return report;
    }
    std::vector<Polynomial> fs;
    fs.reserve(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
        fs.push_back(gs[i].pow(es[i]));
    }
    Polynomial total = Polynomial::zero(gs.front().context());
    for (const auto& f : fs) total += f;
    add_hypothesis(report, "powers-sum-zero", total.is_zero(),
                   "sum of powers is " + total.to_string());
    bool any_zero = std::any_of(fs.begin(), fs.end(),
                                [](const Polynomial& f) { return f.is_zero(); });
    add_hypothesis(report, "members-nonzero", !any_zero, "zero member");
    if (!total.is_zero() || any_zero) {
        finish_hypotheses(report);
        return report;
    }
    VanishingSum sum = VanishingSum::build(fs);
    masons2_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;

    long d = static_cast<long>(sum.span_dimension());
    Rational inv_e_sum(0);
    for (unsigned e : es) inv_e_sum += Rational(1, e);
    Rational threshold = Rational(1) / Rational(d - 1);

    BoundEntry strict = make_entry("fercat", "d=" + std::to_string(d), threshold,
                                   inv_e_sum, true,
                                   "strict inequality required");
    strict.holds = threshold < inv_e_sum;
    report.entries.push_back(strict);

    long max_deg = max_member_degree(sum);
    report.entries.push_back(make_entry(
        "fchy", "", Rational(d) / 2,
        (inv_e_sum - threshold) * Rational(max_deg), true,
        "degree form"));
    return report;
}

GenFerReport genfer_decompose(const std::vector<Polynomial>& gs, unsigned e) {
    GenFerReport report;
    report.exponent = e;
    report.n = gs.size();
    if (gs.empty()) throw error("empty power family");
    const Context& ctx = gs.front().context();
    bool all_zero = std::all_of(gs.begin(), gs.end(),
                                [](const Polynomial& g) { return g.is_zero(); });
    if (all_zero) throw error("all members zero");
    Polynomial total = Polynomial::zero(ctx);
    for (const auto& g : gs) total += g.pow(e);
    if (!total.is_zero()) {
        throw error("the e-th powers do not sum to zero");
    }
    size_t n = gs.size();
    report.premise_met = e >= n * (n - 2);

    // Similarity classes; zero members share one class of their own.
    std::vector<long> class_of(n, -1);
    std::vector<std::vector<size_t>> classes;
    long zero_class = -1;
    for (size_t i = 0; i < n; ++i) {
        if (gs[i].is_zero()) {
            if (zero_class < 0) {
                zero_class = static_cast<long>(classes.size());
                classes.push_back({});
            }
            class_of[i] = zero_class;
            classes[zero_class].push_back(i);
            continue;
        }
        bool placed = false;
        for (size_t c = 0; c < classes.size() && !placed; ++c) {
            if (static_cast<long>(c) == zero_class) continue;
            size_t rep = classes[c].front();
            if (linear_rank({gs[rep], gs[i]}) == 1) {
                class_of[i] = static_cast<long>(c);
                classes[c].push_back(i);
                placed = true;
            }
        }
        if (!placed) {
            class_of[i] = static_cast<long>(classes.size());
            classes.push_back({i});
        }
    }
    report.classes = classes;
    report.decomposition_exists = true;
    for (const auto& cls : classes) {
        Polynomial s = Polynomial::zero(ctx);
        for (size_t i : cls) s += gs[i].pow(e);
        bool vanishes = s.is_zero();
        report.class_vanishes.push_back(vanishes);
        if (!vanishes) report.decomposition_exists = false;
    }
    report.theorem_violation = report.premise_met && !report.decomposition_exists;
    report.note = report.premise_met
                      ? "premise e >= n(n-2) met"
                      : "premise unmet (e < n(n-2)); decomposition attempted anyway";
    return report;
}

namespace {

void davenport_entries(BoundReport& report, const VanishingSum& sum) {
    size_t n = sum.size();
    long k = static_cast<long>(sum.constant_count());
    long d = static_cast<long>(sum.span_dimension());
    long deg_last = sum.member(n - 1).degree_checked();
    long max_front = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        max_front = std::max(max_front, sum.member(i).degree_checked());
    }
    long lhs = max_front - deg_last;
    long r_front = 0;
    std::vector<Polynomial> front(sum.members().begin(), sum.members().end() - 1);
    for (const auto& f : front) r_front += rdeg(f);

    long lo = std::max<long>(d, 2), hi = static_cast<long>(n) - k;
    if (lo > hi) report.trace.push_back("d' range empty: d > n-k");
    bool equality_seen = false;
    for (long dp = lo; dp <= hi; ++dp) {
        BoundEntry e = make_entry(
            "predav", "d'=" + std::to_string(dp), Rational(lhs),
            Rational(dp - 1) * (Rational(r_front) - Rational(dp) / 2));
        if (e.equality) equality_seen = true;
        report.entries.push_back(std::move(e));
    }
    if (equality_seen) {
        Polynomial g = gcd_many(sum.members());
        report.post_conditions.push_back(
            {"equality-implies-gcd-1", g.is_constant(),
             g.is_constant() ? "" : "equality reached but gcd is " + g.to_string()});
    }
}

}  // namespace

BoundReport check_davenport(const VanishingSum& sum, const VerifyOptions& opt) {
    (void)opt;
    BoundReport report;
    report.theorem = "davenport";
    add_hypothesis(report, "not-all-similar", sum.span_dimension() >= 2,
                   "span dimension " + std::to_string(sum.span_dimension()));
    add_mode_hypothesis(report, sum, HypothesisMode::DegBounded,
                        "subsum-gcd-degree-bounded");
    if (!finish_hypotheses(report)) return report;

    ConsolidationResult cons = consolidate_constants(sum);
    if (cons.changed) {
        report.trace.push_back("preprocessing: " + cons.note);
        davenport_entries(report, cons.sum);
    } else {
        davenport_entries(report, sum);
    }
    return report;
}

BoundReport check_davenport_powers(const std::vector<Polynomial>& gs,
                                   const std::vector<unsigned>& es,
                                   const VerifyOptions& opt) {
    (void)opt;
    BoundReport report;
    report.theorem = "davenport-powers";
    if (gs.size() != es.size() || gs.empty()) {
        add_hypothesis(report, "arity", false, "one exponent per base required");
        finish_hypotheses(report);
        return report;
    }
    const Context& ctx = gs.front().context();
    size_t n = gs.size();
    std::vector<Polynomial> fs;
    Polynomial total = Polynomial::zero(ctx);
    bool any_zero = false;
    for (size_t i = 0; i < n; ++i) {
        fs.push_back(gs[i].pow(es[i]));
        any_zero = any_zero || fs.back().is_zero();
        total += fs.back();
    }
    add_hypothesis(report, "members-nonzero", !any_zero, "zero member");
    add_hypothesis(report, "sum-nonzero", !total.is_zero(),
                   "the powers sum to zero");
    // No subsum of the powers vanishes (all nonempty subsets).
    bool subsum_ok = true;
    std::string subsum_witness;
    if (!any_zero && !total.is_zero() && n <= 20) {
        for (unsigned long mask = 1; mask + 1 < (1UL << n) && subsum_ok; ++mask) {
            Polynomial s = Polynomial::zero(ctx);
            std::vector<size_t> idx;
            for (size_t i = 0; i < n; ++i) {
                if (mask & (1UL << i)) {
                    s += fs[i];
                    idx.push_back(i);
                }
            }
            if (s.is_zero()) {
                subsum_ok = false;
                subsum_witness = "vanishing subsum " + indices_text(idx);
            }
        }
    }
    add_hypothesis(report, "no-vanishing-subsum", subsum_ok, subsum_witness);
    if (!finish_hypotheses(report)) return report;

    long d = static_cast<long>(linear_rank(fs));
    long max_f_deg = 0;
    for (const auto& f : fs) max_f_deg = std::max(max_f_deg, f.degree_checked());
    long deg_s = total.degree_checked();
    Rational inv_e_sum(0);
    for (unsigned e : es) inv_e_sum += Rational(1, e);

    long lo = std::max<long>(d, 2), hi = static_cast<long>(n) + 1;
    bool equality_seen = false;
    for (long dp = lo; dp <= hi; ++dp) {
        Rational inv = Rational(1) / Rational(dp - 1);
        Rational lhs = Rational(dp) / 2 - inv * Rational(deg_s);
        Rational rhs = (inv_e_sum - inv) * Rational(max_f_deg);
        BoundEntry e = make_entry("davenport", "d'=" + std::to_string(dp), lhs, rhs);
        if (e.equality) equality_seen = true;
        if (e.holds && !e.equality) {
            e.note = "slack " + rational_text(rhs - lhs);
        }
        report.entries.push_back(std::move(e));
    }
    if (equality_seen) {
        Polynomial g = gcd_many(gs);
        report.post_conditions.push_back(
            {"equality-implies-gcd-1", g.is_constant(),
             g.is_constant() ? "" : "equality reached but gcd is " + g.to_string()});
    }

    // Classical cube-versus-square drop when the shape matches.
    if (n == 2 && es[0] == 3 && es[1] == 2) {
        long deg_f = gs[0].degree_checked();
        report.entries.push_back(make_entry("davenport-classical", "",
                                            Rational(deg_f) / 2 + 1,
                                            Rational(deg_s), true,
                                            "deg(f^3 - g^2) >= deg(f)/2 + 1"));
    }
    return report;
}

namespace {

void tha_hypotheses(BoundReport& report, const VanishingSum& sum) {
    add_hypothesis(report, "n>=3", sum.size() >= 3,
                   "n=" + std::to_string(sum.size()));
    add_hypothesis(report, "univariate", sum.univariate(), "multivariate input");
    add_hypothesis(report, "not-all-constant", !sum.all_constant(),
                   "all members constant");
    Polynomial g = gcd_many(sum.members());
    add_hypothesis(report, "gcd-1", g.is_constant(), "gcd is " + g.to_string());
    bool no_subsum = vanishing_subsums(sum).empty();
    add_hypothesis(report, "no-vanishing-proper-subsum", no_subsum,
                   "a proper subsum vanishes");
}

}  // namespace

BoundReport check_thA(const VanishingSum& sum) {
    BoundReport report;
    report.theorem = "thA";
    tha_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;

    long n = static_cast<long>(sum.size());
    long lhs = max_member_degree(sum);
    Rational rhs = -binomial2(n - 1);
    for (const auto& c : mp_counts(sum.members())) {
        rhs += Rational(c.degree) *
               (binomial2(n - 1) - binomial2(static_cast<long>(c.not_divisible) - 1));
    }
    report.entries.push_back(make_entry("thA", "", Rational(lhs), rhs));
    return report;
}

BoundReport check_thaa(const VanishingSum& sum, const VerifyOptions& opt) {
    BoundReport report;
    report.theorem = "thaa";
    tha_hypotheses(report, sum);
    if (!finish_hypotheses(report)) return report;

    long n = static_cast<long>(sum.size());
    long lhs = max_member_degree(sum);
    DivisorChain chain = divisor_chain(sum.members());

    Rational rhs(0);
    for (long i = 1; i <= n; ++i) {
        rhs += Rational(i - 2) * Rational(rdeg(chain.h[i - 1]));
    }
    rhs -= binomial2(n - 1);
    report.entries.push_back(make_entry("thaa", "", Rational(lhs), rhs));

    // The power-free refinement instantiates the mixed bound at the maximal
    // operator chain (orders 1..n-1), which requires full span dimension.
    {
        bool full_dim = sum.span_dimension() + 1 == sum.size();
        Rational refined(0);
        for (long i = 1; i <= n; ++i) {
            refined += Rational(rdeg_e(chain.h[i - 1], i - 2));
        }
        refined -= binomial2(n - 1);
        report.entries.push_back(make_entry(
            "thaa-power-free", "", Rational(lhs), refined, full_dim,
            full_dim ? "power-free refinement (d = n-1)"
                     : "power-free refinement; informational, needs d = n-1"));
    }

    // Mixed bound with the constructed operator orders.
    if (opt.constructive) {
        PipelineRun run = run_pipeline(sum, opt);
        describe_pipeline(report, run);
        std::vector<unsigned> orders;
        for (const auto& d : run.rs.deltas) orders.push_back(d.order());
        std::sort(orders.begin(), orders.end());
        Rational mixed(0);
        for (long i = 2; i <= n; ++i) {
            mixed += Rational(rdeg_e(chain.h[i - 1],
                                     static_cast<long>(orders[i - 2]) - 1));
        }
        mixed -= Rational(static_cast<long>(run.rs.sigma));
        std::string param = "orders=";
        for (size_t i = 0; i < orders.size(); ++i) {
            param += (i ? "," : "") + std::to_string(orders[i]);
        }
        report.entries.push_back(
            make_entry("mixed-orders", param, Rational(lhs), mixed));
    }

    // Consistency identity: sum r(h_i) = sum r(f_i).
    long rh = 0, rf = 0;
    for (const auto& h : chain.h) rh += rdeg(h);
    for (const auto& f : sum.members()) rf += rdeg(f);
    report.post_conditions.push_back(
        {"sum-r(h)-equals-sum-r(f)", rh == rf,
         rh == rf ? "" : std::to_string(rh) + " != " + std::to_string(rf)});
    return report;
}

BoundReport check_special_position(const VanishingSum& sum,
                                   const VerifyOptions& opt) {
    BoundReport report;
    report.theorem = "special-position";
    masons2_hypotheses(report, sum);

    size_t n = sum.size();
    size_t d = sum.span_dimension();
    if (n > 12) {
        throw limit_exceeded("special-position subset enumeration limit (n <= 12)");
    }
    // Every d-subset must be independent.
    bool all_independent = true;
    std::string witness;
    if (d >= 1 && d <= n) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            std::vector<Polynomial> subset;
            for (size_t i : idx) subset.push_back(sum.member(i));
            if (linear_rank(subset) < d) {
                all_independent = false;
                witness = "dependent subset " + indices_text(idx);
                break;
            }
            size_t i = d;
            bool done = false;
            while (i > 0) {
                --i;
                if (idx[i] != i + n - d) {
                    ++idx[i];
                    for (size_t t = i + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
                    break;
                }
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    add_hypothesis(report, "every-d-subset-independent", all_independent, witness);
    if (!finish_hypotheses(report)) {
        report.trace.push_back("not applicable");
        return report;
    }

    PipelineRun run = run_pipeline(sum, opt);
    describe_pipeline(report, run);
    long lhs = max_member_degree(sum);
    long rho = static_cast<long>(run.rs.rho);
    long sigma = static_cast<long>(run.rs.sigma);
    long nd = static_cast<long>(n - d);

    long r_rho_total = 0;
    for (const auto& f : sum.members()) r_rho_total += rdeg_e(f, rho - 1);
    report.entries.push_back(make_entry(
        "dset", "rho=" + std::to_string(rho), Rational(lhs),
        (Rational(r_rho_total) - binomial2(rho)) / Rational(nd)));

    Polynomial prod = product_of(sum.members());
    report.entries.push_back(make_entry(
        "dseta", "sigma=" + std::to_string(sigma), Rational(lhs),
        (Rational(rdeg_e(prod, sigma)) - Rational(sigma)) / Rational(nd)));
    return report;
}

}  // namespace abcpoly
