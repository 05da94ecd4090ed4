// Text boundary of the toolkit: polynomial expression parsing, the
// line-oriented system file format, and their writers.
//
// Expression grammar (UTF-8, '#' starts a comment to end of line):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' natural)?
//   base   := rational | 'zeta' | 'I' | identifier | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// Implicit multiplication is rejected; '^' takes a non-negative integer
// literal. 'zeta' is the primitive m-th root of unity of the ambient field,
// 'I' is sugar for zeta_4 and requires 4 | m. Every malformed input raises
// parse_error with a 1-based line/column.
#pragma once

#include <string>
#include <vector>

#include "abcpoly/polynomial.hpp"

namespace abcpoly {

Polynomial parse_expression(const std::string& text, const Context& ctx);

// parse_expression(print) == identity; Polynomial::to_string is the printer.
std::string print_canonical(const Polynomial& f);

// System file: line-oriented directives.
//   field m=4
//   vars x,y
//   poly f1 = (x^2+2)^3
//   exp 3            (optional, positional; may also be written "exp e1 = 3")
//   theorems mason3,masons3a   (optional)
struct SystemFile {
    unsigned conductor = 4;
    std::vector<std::string> var_names;
    std::vector<std::string> poly_names;
    std::vector<Polynomial> polys;
    std::vector<unsigned> exponents;      // empty, or one per poly
    std::vector<std::string> theorems;    // empty means "all applicable"
    Context context;
};

SystemFile parse_system_file(const std::string& text);

// Writer for generated inputs (examples, reduce). Comment lines are emitted
// with a leading '#'. Output re-parses to the same system.
struct SystemFileData {
    unsigned conductor = 4;
    std::vector<std::string> var_names;
    std::vector<std::pair<std::string, std::string>> polys;  // name, expression
    std::vector<unsigned> exponents;
    std::vector<std::string> theorems;
    std::vector<std::string> comments;
};
std::string write_system_file(const SystemFileData& data);

}  // namespace abcpoly
