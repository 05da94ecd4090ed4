#include "abcpoly/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abcpoly {

namespace {

Rational binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace

DavenportPair davenport_pair(const CycFieldPtr& field) {
    Context ctx{field, std::make_shared<VarSet>(std::vector<std::string>{"x"})};
    Polynomial x = Polynomial::variable(ctx, 0);
    Polynomial f = x * x + Polynomial::constant(ctx, 2L);
    Polynomial g = x.pow(3) + x.scale(Rational(3));
    Polynomial residue = f.pow(3) - g.pow(2);
    Polynomial expected =
        Polynomial::constant(ctx, 3L) * x * x + Polynomial::constant(ctx, 8L);
    if (!(residue == expected)) {
        throw error("cube/square residue does not match 3x^2+8");
    }
    return {f, g, residue};
}

VanishingSum family_factor_tight(size_t n, unsigned N, const CycFieldPtr& field) {
    if (n < 3 || N < 1) throw error("family needs n >= 3 and N >= 1");
    Context ctx{field, std::make_shared<VarSet>(std::vector<std::string>{"x"})};
    std::vector<Polynomial> fs;
    for (size_t i = 1; i < n; ++i) {
        Monomial m = Monomial::variable(0, N * static_cast<unsigned>(i - 1));
        fs.push_back(Polynomial::term(
            ctx, i == 1 ? Monomial() : m,
            CycNumber::from_rational(field, binom(n - 2, i - 1))));
    }
    Polynomial xN1 = Polynomial::variable(ctx, 0, N) + Polynomial::constant(ctx, 1L);
    fs.push_back(-xN1.pow(static_cast<unsigned>(n - 2)));
    return VanishingSum::build(std::move(fs));
}

unsigned residual_conductor(size_t n) {
    unsigned c = static_cast<unsigned>((n + 1) / 2);
    unsigned m = 4;
    // lcm(4, c)
    unsigned a = m, b = c;
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return 4 / a * c;
}

VanishingSum family_residual(size_t n, ResidualVariant variant,
                             const CycFieldPtr& field) {
    if (n < 3) throw error("family needs n >= 3");
    unsigned c = static_cast<unsigned>((n + 1) / 2);   // ceil(n/2)
    unsigned fl = static_cast<unsigned>(n / 2);        // floor(n/2)
    unsigned m = field->conductor();
    if (m % c != 0 || m % 4 != 0) {
        throw incompatible_context(
            "residual family needs a conductor divisible by lcm(4, ceil(n/2)) = " +
            std::to_string(residual_conductor(n)) + ", have m=" + std::to_string(m));
    }
    Context ctx{field, std::make_shared<VarSet>(std::vector<std::string>{"x"})};
    Polynomial x = Polynomial::variable(ctx, 0);
    unsigned big = variant == ResidualVariant::NoneConstant ? c * (fl + 1) - 2
                                                            : c * fl - 1;
    std::vector<Polynomial> fs;
    for (unsigned i = 1; i <= fl; ++i) {
        unsigned e = variant == ResidualVariant::NoneConstant ? c * i - 1
                                                              : c * (i - 1);
        Rational coeff = Rational(c) * binom(big, e);
        fs.push_back(Polynomial::term(ctx, e == 0 ? Monomial() : Monomial::variable(0, e),
                                      CycNumber::from_rational(field, coeff)));
    }
    long step = static_cast<long>(m / c);
    for (unsigned i = fl + 1; i <= n; ++i) {
        CycNumber zi = CycNumber::root_of_unity(field, step * static_cast<long>(i));
        Polynomial base = x + Polynomial::constant(ctx, zi);
        fs.push_back(-(base.pow(big).scale(zi)));
    }
    return VanishingSum::build(std::move(fs));
}

namespace {

// ---- independent bound evaluation (degrees, radicals, gcds only) ----

long rdeg(const Polynomial& f) {
    Polynomial r = radical(f);
    return r.is_constant() ? 0 : r.degree_checked();
}

long rdeg_e(const Polynomial& f, long e) {
    if (e <= 0 || f.is_constant()) return 0;
    return power_free_part(f, static_cast<unsigned>(e)).degree_checked();
}

struct OracleVerdict {
    std::string theorem;
    bool applicable;
    bool holds;
    Rational min_slack;  // over required inequalities, meaningful when holds
};

std::vector<OracleVerdict> oracle_evaluate(const VanishingSum& sum) {
    std::vector<OracleVerdict> out;
    long n = static_cast<long>(sum.size());
    long k = static_cast<long>(sum.constant_count());
    long d = static_cast<long>(sum.span_dimension());
    long lhs = sum.max_degree();
    bool not_all_constant = !sum.all_constant();
    bool pairwise = hypothesis_check(sum, HypothesisMode::Pairwise).passed;
    bool strict = hypothesis_check(sum, HypothesisMode::StrictGcd).passed;
    bool no_subsum = vanishing_subsums(sum).empty();
    Polynomial prod = product_of(sum.members());
    long r_prod = rdeg(prod);
    long r_sum = 0;
    for (const auto& f : sum.members()) r_sum += rdeg(f);

    auto push = [&](const std::string& id, bool applicable,
                    const std::vector<Rational>& slacks) {
        OracleVerdict v{id, applicable, true, Rational(0)};
        if (applicable && !slacks.empty()) {
            v.min_slack = slacks.front();
            for (const auto& s : slacks) v.min_slack = std::min(v.min_slack, s);
            v.holds = v.min_slack >= 0;
        }
        out.push_back(v);
    };

    push("mason3", n == 3 && sum.univariate() && not_all_constant && pairwise,
         {Rational(r_prod - 1 - lhs)});
    push("masons", n >= 3 && not_all_constant && pairwise,
         {Rational(n - 2) * Rational(r_prod - 1) - Rational(lhs)});
    push("masons2", n >= 3 && not_all_constant && strict,
         {Rational(n - 2) * Rational(r_sum - 1) - Rational(lhs)});
    push("masons2a", n >= 3 && not_all_constant && strict,
         {Rational(n - 1) * Rational(n - 2) / 2 * Rational(r_prod - 1) -
          Rational(lhs)});

    // Theorem-5 side: the d' sweep plus the existential rho form.
    {
        std::vector<Rational> slacks;
        for (long dp = d; dp <= n - k + 1; ++dp) {
            slacks.push_back(Rational(dp - 1) *
                                 (Rational(r_sum) - Rational(dp) / 2) -
                             Rational(lhs));
        }
        Rational best(-1);
        bool have = false;
        for (long rho = 2; rho <= d; ++rho) {
            long total = 0;
            for (const auto& f : sum.members()) total += rdeg_e(f, rho - 1);
            Rational s = Rational(total) - binomial2(rho) - Rational(lhs);
            if (!have || s > best) {
                best = s;
                have = true;
            }
        }
        if (have) slacks.push_back(best);
        push("masons3", n >= 3 && not_all_constant && strict, slacks);
    }
    {
        std::vector<Rational> slacks;
        slacks.push_back(Rational(d) * Rational(d - 1) / 2 * Rational(r_prod - 1) -
                         Rational(lhs));
        Rational best(-1);
        bool have = false;
        for (long sigma = 1; sigma <= d * (d - 1) / 2; ++sigma) {
            Rational s =
                Rational(rdeg_e(prod, sigma)) - Rational(sigma) - Rational(lhs);
            if (!have || s > best) {
                best = s;
                have = true;
            }
        }
        if (have) slacks.push_back(best);
        push("masons3a", n >= 3 && not_all_constant && strict, slacks);
    }

    bool gcd_one = gcd_many(sum.members()).is_constant();
    bool tha_ok = n >= 3 && sum.univariate() && not_all_constant && gcd_one &&
                  no_subsum;
    {
        Rational rhs = -binomial2(n - 1);
        if (tha_ok) {
            for (const auto& c : mp_counts(sum.members())) {
                rhs += Rational(c.degree) *
                       (binomial2(n - 1) -
                        binomial2(static_cast<long>(c.not_divisible) - 1));
            }
        }
        push("thA", tha_ok, {rhs - Rational(lhs)});
    }
    if (tha_ok && n <= 12) {
        DivisorChain chain = divisor_chain(sum.members());
        Rational rhs(0);
        for (long i = 1; i <= n; ++i) {
            rhs += Rational(i - 2) * Rational(rdeg(chain.h[i - 1]));
        }
        rhs -= binomial2(n - 1);
        push("thaa", true, {rhs - Rational(lhs)});
    } else {
        push("thaa", false, {});
    }
    return out;
}

std::string canonical_form(const std::vector<Polynomial>& fs) {
    std::string best;
    for (size_t j = 0; j < fs.size(); ++j) {
        CycNumber scale = fs[j].leading_coefficient().inverse();
        std::vector<std::string> texts;
        texts.reserve(fs.size());
        for (const auto& f : fs) texts.push_back(f.scale(scale).to_string());
        std::sort(texts.begin(), texts.end());
        std::string joined;
        for (const auto& t : texts) {
            joined += t;
            joined += " ; ";
        }
        if (best.empty() || joined < best) best = std::move(joined);
    }
    return best;
}

}  // namespace

BruteForceResult brute_force_bounds(const SearchSpace& space, bool cross_check) {
    if (space.terms < 3) throw error("brute force needs n >= 3");
    if (space.coefficients.empty()) throw error("empty coefficient set");
    Context ctx{space.field,
                std::make_shared<VarSet>(std::vector<std::string>{"x"})};

    // Pool of nonzero univariate polynomials with coefficients in the set.
    std::vector<Polynomial> pool;
    {
        size_t width = space.degree_cap + 1;
        std::vector<size_t> odo(width, 0);
        while (true) {
            Polynomial::TermMap terms;
            Polynomial p = Polynomial::zero(ctx);
            for (size_t t = 0; t < width; ++t) {
                const Rational& c = space.coefficients[odo[t]];
                if (c != 0) {
                    p += Polynomial::term(
                        ctx, t == 0 ? Monomial() : Monomial::variable(0, static_cast<unsigned>(t)),
                        CycNumber::from_rational(space.field, c));
                }
            }
            if (!p.is_zero()) pool.push_back(std::move(p));
            size_t t = 0;
            while (t < width && ++odo[t] == space.coefficients.size()) {
                odo[t] = 0;
                ++t;
            }
            if (t == width) break;
        }
    }

    size_t free_members = space.terms - 1;
    double estimate = 1;
    for (size_t i = 0; i < free_members; ++i) estimate *= static_cast<double>(pool.size());
    if (estimate > static_cast<double>(space.budget)) {
        throw budget_exhausted("candidate count exceeds budget");
    }

    BruteForceResult result;
    std::set<std::string> seen;
    std::vector<size_t> pick(free_members, 0);
    while (true) {
        ++result.enumerated;
        std::vector<Polynomial> fs;
        fs.reserve(space.terms);
        Polynomial total = Polynomial::zero(ctx);
        for (size_t i = 0; i < free_members; ++i) {
            fs.push_back(pool[pick[i]]);
            total += pool[pick[i]];
        }
        if (!total.is_zero()) {
            fs.push_back(-total);
            std::string key = canonical_form(fs);
            if (seen.insert(key).second) {
                VanishingSum sum = VanishingSum::build(fs);
                bool admissible =
                    !sum.all_constant() &&
                    hypothesis_check(sum, HypothesisMode::StrictGcd).passed;
                if (admissible) {
                    ++result.passing;
                    std::vector<OracleVerdict> verdicts = oracle_evaluate(sum);
                    CatalogEntry entry;
                    for (const auto& f : fs) entry.members.push_back(f.to_string());
                    std::sort(entry.members.begin(), entry.members.end());
                    for (const auto& v : verdicts) {
                        if (!v.applicable) continue;
                        entry.slack.emplace_back(v.theorem, v.min_slack);
                        if (v.holds && v.min_slack == 0) {
                            entry.equalities.push_back(v.theorem);
                        }
                        if (!v.holds) {
                            result.violations.push_back(v.theorem + " fails on " + key);
                        }
                    }
                    if (cross_check) {
                        VerifyOptions opt;
                        std::vector<std::pair<std::string, BoundReport>> reports;
                        reports.emplace_back("mason3", check_mason3(sum));
                        reports.emplace_back("masons", check_masons(sum));
                        reports.emplace_back("masons2", check_masons2(sum));
                        reports.emplace_back("masons2a", check_masons2a(sum));
                        reports.emplace_back("masons3", check_masons3(sum, opt));
                        reports.emplace_back("masons3a", check_masons3a(sum, opt));
                        reports.emplace_back("thA", check_thA(sum));
                        reports.emplace_back("thaa", check_thaa(sum, opt));
                        for (const auto& v : verdicts) {
                            const BoundReport* rep = nullptr;
                            for (const auto& [id, r] : reports) {
                                if (id == v.theorem) rep = &r;
                            }
                            if (!rep) continue;
                            bool verifier_ok =
                                rep->applicable && rep->all_required_hold();
                            bool oracle_ok = v.applicable && v.holds;
                            if (verifier_ok != oracle_ok ||
                                rep->applicable != v.applicable) {
                                result.mismatches.push_back(
                                    v.theorem + " verdict mismatch on " + key);
                            }
                        }
                    }
                    result.catalog.push_back(std::move(entry));
                }
            }
        }
        size_t i = 0;
        while (i < free_members && ++pick[i] == pool.size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == free_members) break;
    }
    std::sort(result.catalog.begin(), result.catalog.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return a.members < b.members;
              });
    return result;
}

std::vector<FermatSolution> fermat_search(const std::array<unsigned, 3>& es,
                                          unsigned degree_cap,
                                          const std::vector<Rational>& coefficients,
                                          const CycFieldPtr& field,
                                          std::uint64_t budget) {
    if (degree_cap < 1) throw error("degree cap must allow nonconstant bases");
    if (coefficients.empty()) throw error("empty coefficient set");
    if (es[0] < 1 || es[1] < 1 || es[2] < 1) throw error("exponents must be positive");
    Context ctx{field, std::make_shared<VarSet>(std::vector<std::string>{"x"})};

    std::vector<Polynomial> pool;
    {
        size_t width = degree_cap + 1;
        std::vector<size_t> odo(width, 0);
        while (true) {
            Polynomial p = Polynomial::zero(ctx);
            for (size_t t = 0; t < width; ++t) {
                const Rational& c = coefficients[odo[t]];
                if (c != 0) {
                    p += Polynomial::term(
                        ctx, t == 0 ? Monomial() : Monomial::variable(0, static_cast<unsigned>(t)),
                        CycNumber::from_rational(field, c));
                }
            }
            if (!p.is_zero() && !p.is_constant()) pool.push_back(std::move(p));
            size_t t = 0;
            while (t < width && ++odo[t] == coefficients.size()) {
                odo[t] = 0;
                ++t;
            }
            if (t == width) break;
        }
    }
    if (static_cast<double>(pool.size()) * static_cast<double>(pool.size()) >
        static_cast<double>(budget)) {
        throw budget_exhausted("candidate count exceeds budget");
    }

    // Residual powers are shared per pool element.
    std::vector<Polynomial> pow1, pow2;
    pow1.reserve(pool.size());
    for (const auto& g : pool) pow1.push_back(g.pow(es[0]));
    if (es[1] == es[0]) {
        pow2 = pow1;
    } else {
        pow2.reserve(pool.size());
        for (const auto& g : pool) pow2.push_back(g.pow(es[1]));
    }

    std::vector<FermatSolution> solutions;
    unsigned e3 = es[2];
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = 0; j < pool.size(); ++j) {
            if (!gcd(pool[i], pool[j]).is_constant()) continue;
            Polynomial h = -pow1[i] - pow2[j];
            if (h.is_zero()) continue;
            if (e3 == 1) {
                solutions.push_back({pool[i], pool[j], h,
                                     CycNumber::one(field),
                                     "e3=1: residual extracted directly"});
                continue;
            }
            if (h.is_constant()) {
                // A nonzero constant is an e3-th power over the complex field.
                solutions.push_back({pool[i], pool[j],
                                     Polynomial::constant(ctx, 1L),
                                     h.constant_value(), "constant residual"});
                continue;
            }
            if (h.degree_checked() % e3 != 0) continue;
            // Square-free residuals of positive degree cannot be proper powers.
            Polynomial d = h.derivative(0);
            if (gcd(h, d).is_constant()) continue;
            bool ok = true;
            Polynomial root = Polynomial::constant(ctx, 1L);
            for (const auto& part : squarefree_decomposition(h)) {
                if (part.multiplicity % e3 != 0) {
                    ok = false;
                    break;
                }
                root = root * part.component.pow(part.multiplicity / e3);
            }
            if (!ok) continue;
            auto unit_part = try_exact_div(h, root.pow(e3));
            if (!unit_part || !unit_part->is_constant()) continue;
            solutions.push_back({pool[i], pool[j], root,
                                 unit_part->constant_value(),
                                 "multiplicities divisible by e3"});
        }
    }
    return solutions;
}

}  // namespace abcpoly
