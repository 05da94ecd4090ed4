#include <doctest.h>

#include "abcpoly/bounds.hpp"
#include "abcpoly/parser.hpp"
#include "support/test_helpers.hpp"

using namespace abcpoly;
using namespace abcpoly::testing;

namespace {

Context ctx1() { return make_context(4, {"x"}); }

Polynomial parse1(const std::string& s) {
    Context c = ctx1();
    return parse_expression(s, c);
}

VanishingSum davenport_sum() {
    return VanishingSum::build({parse1("-(x^2+2)^3"), parse1("(x^3+3*x)^2"),
                                parse1("3*x^2+8")});
}

const BoundEntry& entry_of(const BoundReport& r, const std::string& label,
                           const std::string& parameter = "") {
    for (const auto& e : r.entries) {
        if (e.label == label && (parameter.empty() || e.parameter == parameter)) {
            return e;
        }
    }
    REQUIRE_MESSAGE(false, "missing entry ", label, " ", parameter);
    static BoundEntry dummy;
    return dummy;
}

}  // namespace

TEST_CASE("three-term bound on the named systems") {
    BoundReport dav = check_mason3(davenport_sum());
    REQUIRE(dav.applicable);
    CHECK(entry_of(dav, "mason3").lhs == 6);
    CHECK(entry_of(dav, "mason3").rhs == 6);
    CHECK(entry_of(dav, "mason3").equality);

    BoundReport square = check_mason3(VanishingSum::build(
        {parse1("x^2"), parse1("2*x+1"), parse1("-(x+1)^2")}));
    REQUIRE(square.applicable);
    CHECK(entry_of(square, "mason3").lhs == 2);
    CHECK(entry_of(square, "mason3").rhs == 2);
    CHECK(entry_of(square, "mason3").equality);

    BoundReport constants = check_mason3(VanishingSum::build(
        {parse1("1"), parse1("1"), parse1("-2")}));
    CHECK(!constants.applicable);
}

TEST_CASE("n-term bounds and the refined residuals") {
    BoundReport r = check_masons(davenport_sum());
    REQUIRE(r.applicable);
    CHECK(entry_of(r, "masons").rhs == 6);
    CHECK(entry_of(r, "masons").equality);
    CHECK(entry_of(r, "masons-bt").rhs == 6);

    BoundReport kk = check_masons2(davenport_sum());
    REQUIRE(kk.applicable);
    CHECK(entry_of(kk, "kk").lhs == 6);
    CHECK(entry_of(kk, "kk").rhs == 6);

    BoundReport kka = check_masons2a(davenport_sum());
    REQUIRE(kka.applicable);
    CHECK(entry_of(kka, "kka").rhs == 6);
}

TEST_CASE("the paired four-term system is rejected with a witness") {
    VanishingSum paired = VanishingSum::build(
        {parse1("x^3"), parse1("-x^3"), parse1("(x+1)^3"), parse1("-(x+1)^3")});
    BoundReport r = check_masons2(paired);
    CHECK(!r.applicable);
    bool found = false;
    for (const auto& h : r.hypotheses) {
        if (h.name == "subsum-gcd-1" && !h.passed) {
            found = true;
            CHECK(h.witness.find("{1,2}") != std::string::npos);
        }
    }
    CHECK(found);
}

TEST_CASE("constructed operator data on the cube/square system") {
    RhoSigmaResult rs = compute_rho_sigma(davenport_sum());
    CHECK(rs.rho == 2);
    CHECK(rs.sigma == 1);
    CHECK(!rs.wronskian.is_zero());
    CHECK(rs.order_one_count >= 1);
}

TEST_CASE("any admissible three-term system pinches rho and sigma") {
    Prng rng(0x3333);
    Context c = ctx1();
    for (int trial = 0; trial < 20; ++trial) {
        VanishingSum sum = random_admissible_univariate(rng, c, 3, 5);
        RhoSigmaResult rs = compute_rho_sigma(sum);
        CHECK(rs.rho == 2);
        CHECK(rs.sigma == 1);
    }
}

TEST_CASE("existential and sweep bounds on the cube/square system") {
    BoundReport r = check_masons3(davenport_sum());
    REQUIRE(r.applicable);
    CHECK(entry_of(r, "klhy", "rho=2").lhs == 6);
    CHECK(entry_of(r, "klhy", "rho=2").rhs == 6);
    CHECK(entry_of(r, "klhy", "rho=2").equality);
    CHECK(entry_of(r, "kl", "d'=2").equality);
    CHECK(r.all_required_hold());

    BoundReport ra = check_masons3a(davenport_sum());
    REQUIRE(ra.applicable);
    CHECK(entry_of(ra, "klahy", "sigma=1").rhs == 6);
    CHECK(entry_of(ra, "klahy", "sigma=1").equality);
    CHECK(entry_of(ra, "kla", "d'=2").rhs == 6);
}

TEST_CASE("fermat-catalan on the adjusted cube/square input") {
    Context c = ctx1();
    std::vector<Polynomial> gs{
        parse_expression("x^2+2", c),
        parse_expression("I*(x^3+3*x)", c),
        parse_expression("-(3*x^2+8)", c),
    };
    std::vector<unsigned> es{3, 2, 1};
    BoundReport r = check_fermat_catalan(gs, es);
    REQUIRE(r.applicable);
    const BoundEntry& strict = entry_of(r, "fercat");
    CHECK(strict.lhs == 1);                // 1/(d-1) with d = 2
    CHECK(strict.rhs == Rational(11, 6));  // 1/3 + 1/2 + 1
    CHECK(strict.holds);
    const BoundEntry& fchy = entry_of(r, "fchy");
    CHECK(fchy.lhs == 1);  // d/2
    CHECK(fchy.rhs == (Rational(11, 6) - 1) * 6);
    CHECK(fchy.holds);
}

TEST_CASE("fermat-catalan trivially passes with unit exponents") {
    Context c = ctx1();
    std::vector<Polynomial> gs{parse1("x^2"), parse1("2*x+1"),
                               parse1("-(x+1)^2")};
    BoundReport r = check_fermat_catalan(gs, {1, 1, 1});
    REQUIRE(r.applicable);
    CHECK(entry_of(r, "fercat").rhs == 3);
    CHECK(entry_of(r, "fercat").holds);
}

TEST_CASE("fermat-catalan reports hypothesis failures without claims") {
    Context c = ctx1();
    std::vector<Polynomial> gs{parse1("x^3"), parse1("x^3"), parse1("-2*x^3")};
    BoundReport r = check_fermat_catalan(gs, {1, 1, 1});
    CHECK(!r.applicable);
    CHECK(r.entries.empty());
}

TEST_CASE("power sums decompose into similarity classes") {
    Context c6 = make_context(6, {"x"});
    Polynomial x = Polynomial::variable(c6, 0);

    SUBCASE("one nonzero class plus the zero class") {
        // x^3 + (zeta_6^5 x)^3 + 0^3 = x^3 - x^3
        std::vector<Polynomial> gs{
            x, x.scale(CycNumber::root_of_unity(c6.field, 5)),
            Polynomial::zero(c6)};
        GenFerReport r = genfer_decompose(gs, 3);
        CHECK(r.premise_met);  // 3 >= 3(3-2)
        CHECK(r.decomposition_exists);
        CHECK(!r.theorem_violation);
        REQUIRE(r.classes.size() == 2);
        CHECK(r.classes[0] == std::vector<size_t>{0, 1});
    }
    SUBCASE("two disjoint similar pairs") {
        Polynomial f = x + Polynomial::constant(c6, 1L);
        Polynomial g = x * x + Polynomial::constant(c6, 2L);
        std::vector<Polynomial> gs{f, -f, g, -g};
        GenFerReport r = genfer_decompose(gs, 9);
        CHECK(r.premise_met);  // 9 >= 4*2
        REQUIRE(r.classes.size() == 2);
        CHECK(r.classes[0] == std::vector<size_t>{0, 1});
        CHECK(r.classes[1] == std::vector<size_t>{2, 3});
        CHECK(r.decomposition_exists);
    }
    SUBCASE("premise unmet still attempts the decomposition") {
        std::vector<Polynomial> gs{x, -x, Polynomial::zero(c6)};
        GenFerReport r = genfer_decompose(gs, 1);
        CHECK(!r.premise_met);
        CHECK(r.decomposition_exists);
        CHECK(!r.theorem_violation);
    }
}

TEST_CASE("degree-drop bound on the cube/square triple") {
    BoundReport r = check_davenport(davenport_sum());
    REQUIRE(r.applicable);
    const BoundEntry& d2 = entry_of(r, "predav", "d'=2");
    CHECK(d2.lhs == 4);
    CHECK(d2.rhs == 4);
    CHECK(d2.equality);
    CHECK(entry_of(r, "predav", "d'=3").holds);
    REQUIRE(r.post_conditions.size() == 1);
    CHECK(r.post_conditions[0].name == "equality-implies-gcd-1");
    CHECK(r.post_conditions[0].passed);
}

TEST_CASE("degree-drop bound in power form reproduces the classical numbers") {
    Context c = ctx1();
    std::vector<Polynomial> gs{parse_expression("x^2+2", c),
                               parse_expression("I*(x^3+3*x)", c)};
    std::vector<unsigned> es{3, 2};
    BoundReport r = check_davenport_powers(gs, es);
    REQUIRE(r.applicable);
    const BoundEntry& d2 = entry_of(r, "davenport", "d'=2");
    CHECK(d2.lhs == -1);
    CHECK(d2.rhs == -1);
    CHECK(d2.equality);
    const BoundEntry& d3 = entry_of(r, "davenport", "d'=3");
    CHECK(d3.lhs == Rational(1, 2));
    CHECK(d3.rhs == 2);
    CHECK(d3.holds);
    CHECK(d3.note.find("slack") != std::string::npos);
    const BoundEntry& classical = entry_of(r, "davenport-classical");
    CHECK(classical.lhs == 2);  // deg(f)/2 + 1
    CHECK(classical.rhs == 2);  // deg(f^3 - g^2)
    CHECK(classical.equality);
    // equality at d'=2 with gcd(f, i g) = 1
    REQUIRE(r.post_conditions.size() == 1);
    CHECK(r.post_conditions[0].passed);
}

TEST_CASE("divisor-count bounds on the cube/square system") {
    BoundReport a = check_thA(davenport_sum());
    REQUIRE(a.applicable);
    CHECK(entry_of(a, "thA").lhs == 6);
    CHECK(entry_of(a, "thA").rhs == 6);
    CHECK(entry_of(a, "thA").equality);

    BoundReport b = check_thaa(davenport_sum());
    REQUIRE(b.applicable);
    CHECK(entry_of(b, "thaa").rhs == 6);
    CHECK(entry_of(b, "thaa").equality);
    CHECK(entry_of(b, "thaa-power-free").rhs == 6);
    CHECK(entry_of(b, "mixed-orders").rhs == 6);
    REQUIRE(b.post_conditions.size() == 1);
    CHECK(b.post_conditions[0].passed);

    // a list that does not sum to zero never reaches the verifier
    CHECK_THROWS_AS(VanishingSum::build({parse1("x^2"), parse1("x*(x+1)"),
                                         parse1("(x+1)^2")}),
                    error);
}

TEST_CASE("three-term consistency between divisor counts and the basic bound") {
    Prng rng(0x77);
    Context c = ctx1();
    int done = 0;
    while (done < 25) {
        VanishingSum sum = random_admissible_univariate(rng, c, 3, 4);
        if (!hypothesis_check(sum, HypothesisMode::Pairwise).passed) continue;
        BoundReport tha = check_thA(sum);
        BoundReport m3 = check_mason3(sum);
        REQUIRE(tha.applicable);
        REQUIRE(m3.applicable);
        CHECK(entry_of(tha, "thA").rhs == entry_of(m3, "mason3").rhs);
        ++done;
    }
}

TEST_CASE("special-position bounds") {
    SUBCASE("cube/square system collapses to the rho bound") {
        BoundReport r = check_special_position(davenport_sum());
        REQUIRE(r.applicable);
        CHECK(entry_of(r, "dset").lhs == 6);
        CHECK(entry_of(r, "dset").rhs == 6);  // (sum r_1 - 1)/(n-d) with n-d=1
        CHECK(entry_of(r, "dseta").rhs == 6);
    }
    SUBCASE("a dependent d-subset reports not applicable") {
        VanishingSum sum = VanishingSum::build(
            {parse1("x"), parse1("2*x"), parse1("x^2"), parse1("-x^2 - 3*x")});
        BoundReport r = check_special_position(sum);
        CHECK(!r.applicable);
    }
    SUBCASE("frozen n=4, d=2 instance") {
        // u = x^2, v = (x+1)^2, members (u, v, u+2v, -2u-3v): every 2-subset
        // independent, span dimension 2.
        Polynomial u = parse1("x^2"), v = parse1("(x+1)^2");
        VanishingSum sum = VanishingSum::build(
            {u, v, u + v.scale(Rational(2)),
             -(u.scale(Rational(2)) + v.scale(Rational(3)))});
        CHECK(sum.span_dimension() == 2);
        BoundReport r = check_special_position(sum);
        REQUIRE(r.applicable);
        CHECK(entry_of(r, "dset").lhs == 2);
        CHECK(entry_of(r, "dset").rhs == Rational(5, 2));
        CHECK(entry_of(r, "dseta").rhs == Rational(5, 2));
    }
}

TEST_CASE("reduction to one variable") {
    SUBCASE("fixed two-variable system keeps degrees") {
        // The shared factor x1 has degree 1 and must keep that degree.
        Context c2 = make_context(4, {"x1", "x2"});
        VanishingSum sum = VanishingSum::build(
            {parse_expression("x1*x2", c2), parse_expression("-x1*x2 + x1", c2),
             parse_expression("-x1", c2)});
        Prng rng(1);
        ReductionResult red = reduce_to_univariate(sum, rng);
        CHECK(red.reduced.univariate());
        CHECK(red.reduced.member(0).degree_checked() == 2);
        CHECK(red.reduced.member(1).degree_checked() == 2);
        CHECK(red.reduced.member(2).degree_checked() == 1);
        CHECK(gcd_many(red.reduced.members()).degree_checked() == 1);
    }
    SUBCASE("gcd-1 two-variable system stays gcd 1") {
        Context c2 = make_context(4, {"x1", "x2"});
        VanishingSum sum = VanishingSum::build(
            {parse_expression("x1*x2", c2), parse_expression("-x1*x2 + x2^2", c2),
             parse_expression("x1", c2), parse_expression("-x2^2 - x1", c2)});
        Prng rng(1);
        ReductionResult red = reduce_to_univariate(sum, rng);
        CHECK(red.reduced.univariate());
        CHECK(gcd_many(red.reduced.members()).is_constant());
    }
    SUBCASE("univariate input reduces by the identity") {
        Prng rng(1);
        ReductionResult red = reduce_to_univariate(davenport_sum(), rng);
        CHECK(red.retries == 0);
        CHECK(red.p == std::vector<Rational>{Rational(1)});
        CHECK(red.q == std::vector<Rational>{Rational(0)});
        CHECK(red.reduced.member(2) == parse_expression(
                  "3*x^2+8", red.reduced.context()));
    }
}

TEST_CASE("soundness chain on random admissible univariate systems") {
    Prng rng(0x50d);
    Context c = ctx1();
    for (int trial = 0; trial < 40; ++trial) {
        VanishingSum sum = random_admissible_univariate(
            rng, c, static_cast<size_t>(rng.uniform(3, 5)), 6);
        BoundReport m3 = check_masons3(sum);
        REQUIRE(m3.applicable);
        CHECK(m3.all_required_hold());
        BoundReport m3a = check_masons3a(sum);
        REQUIRE(m3a.applicable);
        CHECK(m3a.all_required_hold());
        BoundReport tha = check_thA(sum);
        REQUIRE(tha.applicable);
        CHECK(tha.all_required_hold());
        BoundReport thaa = check_thaa(sum);
        REQUIRE(thaa.applicable);
        CHECK(thaa.all_required_hold());
    }
}

TEST_CASE("division and degree facts behind the main bound") {
    // On lifted systems: prod(tilde) divides prod(r_{rho-1}(tilde_i)) * W and
    // r_sigma(prod tilde) * W; and deg W <= deg(prod first n-1 tilde) - sigma.
    Prng rng(0xd117);
    Context c = ctx1();
    for (int trial = 0; trial < 25; ++trial) {
        VanishingSum sum = random_admissible_univariate(
            rng, c, static_cast<size_t>(rng.uniform(3, 5)), 5);
        RhoSigmaResult rs = compute_rho_sigma(sum);
        const auto& lifted = rs.lifted;
        size_t n = sum.size();

        // The Wronskian lives in the y variable only.
        CHECK(rs.wronskian.uses_only(lifted.y_var));

        Polynomial prod_all = Polynomial::constant(lifted.lifted_context, 1L);
        Polynomial prod_head = Polynomial::constant(lifted.lifted_context, 1L);
        Polynomial prod_parts = Polynomial::constant(lifted.lifted_context, 1L);
        std::vector<unsigned> into{0u};
        for (size_t i = 0; i < n; ++i) {
            Polynomial t = lifted.tilde[i].map_into(lifted.lifted_context, into);
            prod_all = prod_all * t;
            if (i + 1 < n) prod_head = prod_head * t;
            prod_parts = prod_parts *
                         power_free_part(t, static_cast<unsigned>(rs.rho - 1));
        }
        CHECK(divides(prod_all, prod_parts * rs.wronskian));
        Polynomial sigma_part =
            power_free_part(prod_all, static_cast<unsigned>(rs.sigma));
        CHECK(divides(prod_all, sigma_part * rs.wronskian));
        CHECK(rs.wronskian.degree_checked() <=
              prod_head.degree_checked() - static_cast<long>(rs.sigma));
    }
}

TEST_CASE("reduction preserves power-free degrees downward") {
    Prng rng(0xabc1);
    Context c3 = make_context(4, {"x1", "x2", "x3"});
    for (int trial = 0; trial < 10; ++trial) {
        VanishingSum sum = random_admissible_multivariate(rng, c3, 3, 3);
        Prng inner(trial + 1);
        ReductionResult red = reduce_to_univariate(sum, inner);
        for (size_t i = 0; i < sum.size(); ++i) {
            CHECK(red.reduced.member(i).degree_checked() ==
                  sum.member(i).degree_checked());
            for (unsigned e = 1; e <= 3; ++e) {
                long before = sum.member(i).is_constant()
                                  ? 0
                                  : power_free_part(sum.member(i), e).degree_checked();
                long after = red.reduced.member(i).is_constant()
                                 ? 0
                                 : power_free_part(red.reduced.member(i), e)
                                       .degree_checked();
                CHECK(after <= before);
            }
        }
    }
}

TEST_CASE("restriction path: systems with vanishing subsums still verify") {
    // (x, 1-x, -1, y-part...) has gcd-1 vanishing subsums; the pipeline must
    // restrict before lifting.
    Context c = ctx1();
    VanishingSum sum = VanishingSum::build(
        {parse1("x^2"), parse1("2*x+1"), parse1("-(x+1)^2"), parse1("x^3"),
         parse1("-x^3 + 1"), parse1("-1")});
    REQUIRE(hypothesis_check(sum, HypothesisMode::StrictGcd).passed);
    BoundReport r = check_masons3(sum);
    REQUIRE(r.applicable);
    CHECK(r.all_required_hold());
    bool restricted_note = false;
    for (const auto& t : r.trace) {
        if (t.find("restricted") != std::string::npos) restricted_note = true;
    }
    CHECK(restricted_note);
}
