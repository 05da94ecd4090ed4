#include <doctest.h>

#include "abcpoly/parser.hpp"
#include "abcpoly/search.hpp"
#include "support/test_helpers.hpp"

using namespace abcpoly;

namespace {

Context ctx1() { return make_context(4, {"x"}); }

Polynomial parse1(const std::string& s) {
    Context c = ctx1();
    return parse_expression(s, c);
}

}  // namespace

TEST_CASE("the shipped cube/square pair") {
    DavenportPair pair = davenport_pair();
    CHECK(pair.residue == parse1("3*x^2 + 8"));
    CHECK(pair.residue.degree_checked() ==
          pair.f.degree_checked() / 2 + 1);
    CHECK(gcd(pair.f, pair.g).is_constant());
}

TEST_CASE("binomial family shapes and radical degrees") {
    VanishingSum small = family_factor_tight(4, 1);
    CHECK(small.member(0) == parse1("1"));
    CHECK(small.member(1) == parse1("2*x"));
    CHECK(small.member(2) == parse1("x^2"));
    CHECK(small.member(3) == parse1("-(x+1)^2"));

    VanishingSum big = family_factor_tight(5, 10);
    CHECK(big.max_degree() == 30);
    CHECK(big.span_dimension() == 4);
    CHECK(big.constant_count() == 1);
    long r_total = 0;
    for (const auto& f : big.members()) {
        Polynomial r = radical(f);
        r_total += r.is_constant() ? 0 : r.degree_checked();
    }
    CHECK(r_total == 13);  // 0 + 1 + 1 + 1 + 10
}

TEST_CASE("the residual families vanish exactly") {
    SUBCASE("three members, none constant") {
        auto field = CycField::get(residual_conductor(3));
        VanishingSum sum = family_residual(3, ResidualVariant::NoneConstant, field);
        CHECK(sum.size() == 3);
        CHECK(sum.constant_count() == 0);
        CHECK(hypothesis_check(sum, HypothesisMode::StrictGcd).passed);
    }
    SUBCASE("four members, both variants") {
        auto field = CycField::get(residual_conductor(4));
        VanishingSum plain = family_residual(4, ResidualVariant::NoneConstant, field);
        CHECK(plain.constant_count() == 0);
        CHECK(hypothesis_check(plain, HypothesisMode::StrictGcd).passed);
        VanishingSum with_const =
            family_residual(4, ResidualVariant::FirstConstant, field);
        CHECK(with_const.constant_count() == 1);
        CHECK(hypothesis_check(with_const, HypothesisMode::StrictGcd).passed);
    }
    SUBCASE("five and six members (odd root counts)") {
        // VanishingSum::build inside asserts the exact vanishing.
        auto f5 = CycField::get(residual_conductor(5));
        CHECK(family_residual(5, ResidualVariant::NoneConstant, f5).size() == 5);
        CHECK(family_residual(5, ResidualVariant::FirstConstant, f5).size() == 5);
        auto f6 = CycField::get(residual_conductor(6));
        CHECK(family_residual(6, ResidualVariant::NoneConstant, f6).size() == 6);
    }
    SUBCASE("conductor mismatch is rejected") {
        CHECK_THROWS_AS(family_residual(5, ResidualVariant::NoneConstant,
                                        CycField::get(4)),
                        incompatible_context);
    }
}

TEST_CASE("residual slack in the d' sweep is reported, not asserted") {
    auto field = CycField::get(residual_conductor(4));
    VanishingSum sum = family_residual(4, ResidualVariant::NoneConstant, field);
    BoundReport r = check_masons3(sum);
    REQUIRE(r.applicable);
    CHECK(r.all_required_hold());
}

TEST_CASE("brute force finds the square equality instance") {
    SearchSpace space;
    space.terms = 3;
    space.degree_cap = 2;
    for (long v = -2; v <= 2; ++v) space.coefficients.push_back(Rational(v));
    space.field = CycField::get(1);
    BruteForceResult result = brute_force_bounds(space, /*cross_check=*/false);
    CHECK(result.violations.empty());
    CHECK(result.passing > 0);

    // (x^2, 2x+1, -(x+1)^2) attains the three-term bound with equality.
    bool found = false;
    for (const auto& entry : result.catalog) {
        bool has_square = false, has_line = false;
        for (const auto& m : entry.members) {
            if (m == "x^2") has_square = true;
            if (m == "2*x + 1") has_line = true;
        }
        if (has_square && has_line) {
            for (const auto& t : entry.equalities) {
                if (t == "mason3") found = true;
            }
        }
    }
    CHECK(found);
}

TEST_CASE("brute force cross-check agrees with the verifiers on a small space") {
    SearchSpace space;
    space.terms = 3;
    space.degree_cap = 1;
    for (long v = -1; v <= 1; ++v) space.coefficients.push_back(Rational(v));
    space.field = CycField::get(1);
    BruteForceResult result = brute_force_bounds(space, /*cross_check=*/true);
    CHECK(result.violations.empty());
    CHECK(result.mismatches.empty());
    CHECK(result.passing > 0);
}

TEST_CASE("budget guard trips before enumeration") {
    SearchSpace space;
    space.terms = 4;
    space.degree_cap = 3;
    for (long v = -3; v <= 3; ++v) space.coefficients.push_back(Rational(v));
    space.budget = 10;
    CHECK_THROWS_AS(brute_force_bounds(space), budget_exhausted);
}

TEST_CASE("power search on small spaces") {
    SUBCASE("unit third exponent extracts every residual") {
        std::vector<Rational> coeffs;
        for (long v = 0; v <= 3; ++v) coeffs.push_back(Rational(v));
        auto sols = fermat_search({3, 2, 1}, 3, coeffs);
        bool has_davenport = false;
        for (const auto& s : sols) {
            if (s.g1 == parse_expression("x^2+2", s.g1.context()) &&
                s.g2 == parse_expression("x^3+3*x", s.g2.context())) {
                has_davenport = true;
                CHECK(s.root == -(s.g1.pow(3) + s.g2.pow(2)));
            }
        }
        CHECK(has_davenport);
    }
    SUBCASE("equal unit exponents are abundant") {
        std::vector<Rational> coeffs{Rational(-1), Rational(0), Rational(1)};
        auto sols = fermat_search({1, 1, 1}, 1, coeffs);
        CHECK(!sols.empty());
    }
    SUBCASE("cubes with tiny coefficients admit no solution") {
        std::vector<Rational> coeffs{Rational(-1), Rational(0), Rational(1)};
        auto sols = fermat_search({3, 3, 3}, 2, coeffs);
        CHECK(sols.empty());
    }
}
