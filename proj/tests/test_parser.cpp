#include <doctest.h>

#include "abcpoly/parser.hpp"
#include "support/test_helpers.hpp"

using namespace abcpoly;
using namespace abcpoly::testing;

TEST_CASE("expression parsing hits the expected normal forms") {
    Context c = make_context(4, {"x"});
    CHECK(parse_expression("(x^2+2)^3 - (x^3+3*x)^2", c).to_string() ==
          "3*x^2 + 8");
    CHECK(parse_expression("x - x", c).to_string() == "0");
    CHECK(parse_expression("I^2 + 1", c).is_zero());
    CHECK(parse_expression("1/2 + 1/2", c).to_string() == "1");
    CHECK(parse_expression("-x^2", c) == -parse_expression("x^2", c));
    CHECK(parse_expression("2 - -3", c).to_string() == "5");
}

TEST_CASE("positioned diagnostics on malformed input") {
    Context c = make_context(3, {"x"});
    auto expect_error = [&](const std::string& text, int line, int column) {
        try {
            parse_expression(text, c);
            FAIL("expected parse_error for: ", text);
        } catch (const parse_error& e) {
            CHECK(e.line == line);
            CHECK(e.column == column);
        }
    };
    expect_error("2x", 1, 2);         // implicit multiplication rejected
    expect_error("x + ", 1, 5);       // dangling operator
    expect_error("x + y", 1, 5);      // undeclared identifier
    expect_error("x ^ x", 1, 5);      // exponent must be a literal
    expect_error("x^999999999", 1, 3);  // exponent overflow
    expect_error("(x", 1, 3);         // unbalanced parenthesis
    expect_error("x $ 1", 1, 3);      // lexical error
    expect_error("I", 1, 1);          // m=3 has no fourth root of unity
    expect_error("x +\n* x", 2, 1);   // position tracks line breaks
}

TEST_CASE("round-trip on structured cyclotomic coefficients") {
    Context c = make_context(6, {"x"});
    Polynomial p = parse_expression("zeta*x + 1", c);
    CHECK(parse_expression(p.to_string(), c) == p);
    Polynomial q = parse_expression("(2*zeta - 1/3)*x^2 - zeta", c);
    CHECK(parse_expression(q.to_string(), c) == q);
}

TEST_CASE("round-trip identity on random polynomials") {
    Prng rng(0x60c0de);
    for (unsigned m : {1u, 4u, 6u}) {
        Context c = make_context(m, {"x", "y", "z"});
        for (int trial = 0; trial < 120; ++trial) {
            Polynomial p = random_multivariate(rng, c, 8, 6);
            // sprinkle non-rational coefficients
            if (m > 2 && rng.chance(1, 2)) {
                p = p.scale(CycNumber::root_of_unity(c.field, 1) +
                            CycNumber::from_integer(c.field, rng.uniform(-2, 2)));
            }
            Polynomial back = parse_expression(p.to_string(), c);
            CHECK(back == p);
        }
    }
}

TEST_CASE("system files parse and re-emit") {
    std::string text =
        "# fixture\n"
        "field m=4\n"
        "vars x\n"
        "poly f1 = -(x^2+2)^3\n"
        "poly f2 = (x^3+3*x)^2\n"
        "poly f3 = 3*x^2 + 8\n"
        "theorems mason3,masons3\n";
    SystemFile file = parse_system_file(text);
    CHECK(file.conductor == 4);
    CHECK(file.poly_names == std::vector<std::string>{"f1", "f2", "f3"});
    CHECK(file.theorems == std::vector<std::string>{"mason3", "masons3"});
    Polynomial total = Polynomial::zero(file.context);
    for (const auto& f : file.polys) total += f;
    CHECK(total.is_zero());

    SystemFileData data;
    data.conductor = 4;
    data.var_names = {"x"};
    for (size_t i = 0; i < file.polys.size(); ++i) {
        data.polys.emplace_back(file.poly_names[i], file.polys[i].to_string());
    }
    SystemFile again = parse_system_file(write_system_file(data));
    for (size_t i = 0; i < file.polys.size(); ++i) {
        CHECK(again.polys[i] == file.polys[i]);
    }
}

TEST_CASE("system file errors carry positions") {
    auto expect_error = [&](const std::string& text, int line) {
        try {
            parse_system_file(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("field m=0\n", 1);
    expect_error("vars x\nfrobnicate y\n", 2);
    expect_error("vars x\npoly f1 = x +\n", 2);
    expect_error("vars x\npoly f1 = x\nexp e1 = 2\nexp e2 = 3\n", 4);
    expect_error("field m=4\n", 1);  // no polynomials
    expect_error("vars zeta\npoly f1 = zeta\n", 1);
}

TEST_CASE("exponents attach positionally") {
    std::string text =
        "field m=1\nvars x\npoly g1 = x^2 + 2\npoly g2 = x^3 + 3*x\n"
        "exp e1 = 3\nexp e2 = 2\n";
    SystemFile file = parse_system_file(text);
    CHECK(file.exponents == std::vector<unsigned>{3, 2});
}
