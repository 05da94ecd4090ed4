// Exception hierarchy shared by all abcpoly components.
#pragma once

#include <stdexcept>
#include <string>

namespace abcpoly {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Mixing values from different cyclotomic fields or variable sets.
struct incompatible_context : error {
    using error::error;
};

struct not_a_factor : error {
    using error::error;
};

struct undefined_gcd : error {
    undefined_gcd() : error("gcd(0, 0) is undefined") {}
};

struct not_independent : error {
    using error::error;
};

struct invalid_lift_input : error {
    using error::error;
};

struct limit_exceeded : error {
    using error::error;
};

struct budget_exhausted : error {
    using error::error;
};

// Lexical/syntax/semantic failure with a 1-based source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& message, int line_, int column_)
        : error(message + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_),
          column(column_) {}
};

}  // namespace abcpoly
