#include <doctest.h>

#include "abcpoly/parser.hpp"
#include "abcpoly/polyops.hpp"
#include "support/test_helpers.hpp"

using namespace abcpoly;
using namespace abcpoly::testing;

namespace {

Context ctx1() { return make_context(4, {"x"}); }

Polynomial parse1(const std::string& s) {
    Context c = ctx1();
    return parse_expression(s, c);
}

long rdeg(const Polynomial& f) {
    Polynomial r = radical(f);
    return r.is_constant() ? 0 : r.degree_checked();
}

}  // namespace

TEST_CASE("radical collapses multiplicities") {
    CHECK(radical(parse1("x^3*(x+1)")) == parse1("x^2 + x"));
    CHECK(radical(parse1("(x^2+2)^3")) == parse1("x^2 + 2"));
    CHECK(radical(parse1("7")) == parse1("1"));
    CHECK_THROWS_AS(radical(parse1("0")), error);

    Context c = make_context(4, {"x", "y"});
    Polynomial x = Polynomial::variable(c, 0), y = Polynomial::variable(c, 1);
    CHECK(radical(x.pow(2) * y.pow(3)) == x * y);
}

TEST_CASE("power-free parts on the worked examples") {
    CHECK(power_free_part(parse1("x^3*(x+1)"), 2) == parse1("x^2*(x+1)"));
    CHECK(power_free_degree(parse1("x^3*(x+1)"), 2) == 3);
    // the degree-7 radical behind the equality checks; oracle route computes
    // f / gcd(f, f') with the independent subresultant gcd
    Polynomial big = parse1("(x^2+2)^3*(x^3+3*x)^2*(3*x^2+8)");
    CHECK(power_free_degree(big, 1) == 7);
    Polynomial oracle_gcd = gcd_subresultant(big, big.derivative(0), 0);
    CHECK(radical(big) == normalize_unit(exact_div(big, oracle_gcd)));
    Polynomial sf = parse1("x^2 + 2");
    for (unsigned e = 1; e <= 4; ++e) {
        CHECK(power_free_part(sf, e) == sf);
    }
}

TEST_CASE("radical is multiplicative across coprime factors") {
    Prng rng(0x7ad1ca1);
    Context c = ctx1();
    int done = 0;
    for (int trial = 0; trial < 400 && done < 200; ++trial) {
        Polynomial f = random_univariate(rng, c, 0, 4);
        Polynomial g = random_univariate(rng, c, 0, 4);
        if (f.is_zero() || g.is_zero()) continue;
        if (!gcd(f, g).is_constant()) continue;
        CHECK(radical(f * g) == normalize_unit(radical(f) * radical(g)));
        ++done;
    }
    CHECK(done == 200);
}

TEST_CASE("r_e is bounded by e times r") {
    Prng rng(0xbeef);
    Context c = ctx1();
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = random_univariate(rng, c, 0, 3);
        Polynomial g = random_univariate(rng, c, 0, 2);
        if (f.is_zero() || g.is_zero()) continue;
        Polynomial h = f * f * g;  // force multiplicities
        if (h.is_constant()) continue;
        for (unsigned e = 1; e <= 4; ++e) {
            CHECK(power_free_degree(h, e) <= static_cast<long>(e) * rdeg(h));
        }
    }
}

TEST_CASE("power-free parts multiply into the part of the product") {
    // divisibility form: r_i(a) * r_j(b) divides r_{i+j}(ab)
    Prng rng(0x1234);
    Context c = ctx1();
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_univariate(rng, c, 0, 3);
        Polynomial b = random_univariate(rng, c, 0, 3);
        if (a.is_zero() || b.is_zero()) continue;
        a = a * a;  // non-trivial multiplicity
        for (unsigned i = 1; i <= 2; ++i) {
            for (unsigned j = 1; j <= 2; ++j) {
                Polynomial lhs = power_free_part(a, i) * power_free_part(b, j);
                Polynomial rhs = power_free_part(a * b, i + j);
                CHECK(divides(lhs, rhs));
            }
        }
    }
}

TEST_CASE("valuations by repeated division") {
    CHECK(valuation(parse1("x^3*(x+1)"), parse1("x")) == 3);
    CHECK(valuation(parse1("(x^2+2)^3"), parse1("x^2+2")) == 3);
    CHECK(valuation(parse1("3*x^2+8"), parse1("x")) == 0);
    CHECK_THROWS_AS(valuation(parse1("x"), parse1("2")), error);
}

TEST_CASE("square-free decomposition reconstructs the input") {
    Prng rng(0x51f);
    Context c = ctx1();
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f = random_univariate(rng, c, 0, 2);
        Polynomial g = random_univariate(rng, c, 0, 2);
        if (f.is_zero() || g.is_zero()) continue;
        Polynomial h = f * f * f * g * g;
        if (h.is_constant()) continue;
        auto parts = squarefree_decomposition(h);
        Polynomial rebuilt = Polynomial::constant(c, 1L);
        for (const auto& p : parts) {
            CHECK(gcd(p.component, p.component.derivative(0)).is_constant());
            rebuilt = rebuilt * p.component.pow(p.multiplicity);
        }
        CHECK(normalize_unit(rebuilt) == normalize_unit(h));
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = i + 1; j < parts.size(); ++j) {
                CHECK(gcd(parts[i].component, parts[j].component).is_constant());
            }
        }
    }
}

TEST_CASE("coprime basis of the named families") {
    Context c = ctx1();
    auto basis = coprime_basis({parse1("x^2*(x+1)"), parse1("x*(x+1)^2")});
    REQUIRE(basis.components.size() == 2);
    CHECK(basis.components[0] == parse1("x"));
    CHECK(basis.components[1] == parse1("x + 1"));
    CHECK(basis.valuations[0] == std::vector<unsigned>{2, 1});
    CHECK(basis.valuations[1] == std::vector<unsigned>{1, 2});

    // The refinement keeps x and x^2+3 merged: they occur only inside the
    // second member with one shared multiplicity, so no input separates them
    // and the coarsest gcd-free basis is exact for every divisibility count.
    auto dav = coprime_basis({parse1("(x^2+2)^3"), parse1("(x^3+3*x)^2"),
                              parse1("3*x^2+8")});
    REQUIRE(dav.components.size() == 3);
    CHECK(dav.components[0] == parse1("x^2 + 2"));
    CHECK(dav.components[1] == parse1("x^2 + 8/3"));
    CHECK(dav.components[2] == parse1("x^3 + 3*x"));
    CHECK(dav.valuations[0] == std::vector<unsigned>{3, 0, 0});
    CHECK(dav.valuations[1] == std::vector<unsigned>{0, 0, 2});
    CHECK(dav.valuations[2] == std::vector<unsigned>{0, 1, 0});
    // splitting pressure from another member separates the factors
    auto split = coprime_basis({parse1("(x^2+2)^3"), parse1("(x^3+3*x)^2"),
                                parse1("3*x^2+8"), parse1("x")});
    REQUIRE(split.components.size() == 4);
    CHECK(split.components[0] == parse1("x"));
    CHECK(split.components[1] == parse1("x^2 + 2"));
    CHECK(split.components[2] == parse1("x^2 + 3"));
    CHECK(split.components[3] == parse1("x^2 + 8/3"));
    CHECK(split.valuations[1] == std::vector<unsigned>{2, 0, 2, 0});

    auto constants = coprime_basis({parse1("5"), parse1("7")});
    CHECK(constants.components.empty());
}

TEST_CASE("coprime basis reconstruction on random factored lists") {
    Prng rng(0xc0);
    Context c = ctx1();
    for (int trial = 0; trial < 30; ++trial) {
        auto fs = random_factored_list(rng, c, 4);
        auto basis = coprime_basis(fs);
        for (size_t i = 0; i < fs.size(); ++i) {
            Polynomial rebuilt = Polynomial::constant(c, basis.units[i]);
            for (size_t b = 0; b < basis.components.size(); ++b) {
                rebuilt = rebuilt * basis.components[b].pow(basis.valuations[i][b]);
            }
            CHECK(rebuilt == fs[i]);
        }
        for (size_t a = 0; a < basis.components.size(); ++a) {
            for (size_t b = a + 1; b < basis.components.size(); ++b) {
                CHECK(gcd(basis.components[a], basis.components[b]).is_constant());
            }
        }
    }
}
