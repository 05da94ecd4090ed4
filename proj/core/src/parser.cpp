#include "abcpoly/parser.hpp"

#include <cctype>
#include <sstream>

namespace abcpoly {

namespace {

constexpr unsigned kMaxExponent = 1u << 20;

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
   public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                advance();
            }
            return {Tok::Integer, digits, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ident.push_back(text_[pos_]);
                advance();
            }
            return {Tok::Ident, ident, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'",
                                  line, col);
        }
    }

   private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class ExpressionParser {
   public:
    ExpressionParser(const std::string& text, const Context& ctx)
        : lexer_(text), ctx_(ctx) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        expect(Tok::End, "end of input");
        return p;
    }

   private:
    void bump() { cur_ = lexer_.next(); }
    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) {
            throw parse_error("expected " + what, cur_.line, cur_.column);
        }
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            bump();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == Tok::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (cur_.kind == Tok::Minus) {
            bump();
            return -factor();
        }
        Polynomial b = base();
        if (cur_.kind == Tok::Caret) {
            Token caret = cur_;
            bump();
            expect(Tok::Integer, "a non-negative integer exponent");
            unsigned e = parse_exponent(cur_);
            bump();
            (void)caret;
            return b.pow(e);
        }
        return b;
    }

    unsigned parse_exponent(const Token& tok) {
        unsigned long v = 0;
        for (char c : tok.text) {
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > kMaxExponent) {
                throw parse_error("exponent overflow", tok.line, tok.column);
            }
        }
        return static_cast<unsigned>(v);
    }

    Polynomial base() {
        switch (cur_.kind) {
            case Tok::Integer: {
                Token first = cur_;
                bump();
                if (cur_.kind == Tok::Slash) {
                    bump();
                    expect(Tok::Integer, "a positive denominator");
                    Token den = cur_;
                    bump();
                    Rational q(first.text + "/" + den.text);
                    if (q.get_den() == 0) {
                        throw parse_error("zero denominator", den.line, den.column);
                    }
                    q.canonicalize();
                    return Polynomial::constant(ctx_, q);
                }
                Rational q(first.text);
                q.canonicalize();
                return Polynomial::constant(ctx_, q);
            }
            case Tok::Ident: {
                Token tok = cur_;
                bump();
                if (tok.text == "zeta") {
                    return Polynomial::constant(
                        ctx_, CycNumber::root_of_unity(ctx_.field, 1));
                }
                if (tok.text == "I") {
                    unsigned m = ctx_.conductor();
                    if (m % 4 != 0) {
                        throw parse_error(
                            "'I' requires a conductor divisible by 4 (have m=" +
                                std::to_string(m) + ")",
                            tok.line, tok.column);
                    }
                    return Polynomial::constant(
                        ctx_, CycNumber::root_of_unity(ctx_.field, m / 4));
                }
                auto var = ctx_.vars->index_of(tok.text);
                if (!var) {
                    throw parse_error("undeclared identifier '" + tok.text + "'",
                                      tok.line, tok.column);
                }
                return Polynomial::variable(ctx_, *var);
            }
            case Tok::LParen: {
                bump();
                Polynomial p = expr();
                expect(Tok::RParen, "')'");
                bump();
                return p;
            }
            default:
                throw parse_error("expected a literal, identifier or '('",
                                  cur_.line, cur_.column);
        }
    }

    Lexer lexer_;
    Token cur_;
    const Context& ctx_;
};

}  // namespace

Polynomial parse_expression(const std::string& text, const Context& ctx) {
    return ExpressionParser(text, ctx).parse();
}

std::string print_canonical(const Polynomial& f) { return f.to_string(); }

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SystemFile parse_system_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    unsigned conductor = 4;
    bool conductor_seen = false;
    std::vector<std::string> var_names;
    struct PendingPoly {
        std::string name, expr;
        int line;
    };
    std::vector<PendingPoly> pending;
    std::vector<unsigned> exponents;
    std::vector<std::string> theorems;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        size_t sp = s.find_first_of(" \t");
        std::string keyword = sp == std::string::npos ? s : s.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : strip(s.substr(sp));
        if (keyword == "field") {
            size_t eq = rest.find('=');
            std::string key = eq == std::string::npos ? rest : strip(rest.substr(0, eq));
            std::string val = eq == std::string::npos ? "" : strip(rest.substr(eq + 1));
            if (key != "m" || val.empty()) {
                throw parse_error("field directive must be 'field m=<positive integer>'",
                                  lineno, 1);
            }
            try {
                long v = std::stol(val);
                if (v < 1) throw std::out_of_range("");
                conductor = static_cast<unsigned>(v);
            } catch (const std::exception&) {
                throw parse_error("invalid conductor '" + val + "'", lineno, 1);
            }
            conductor_seen = true;
        } else if (keyword == "vars") {
            for (const auto& name : split_list(rest)) {
                if (name == "zeta" || name == "I") {
                    throw parse_error("variable name '" + name + "' is reserved",
                                      lineno, 1);
                }
                var_names.push_back(name);
            }
        } else if (keyword == "poly") {
            size_t eq = rest.find('=');
            if (eq == std::string::npos) {
                throw parse_error("poly directive must be 'poly <name> = <expression>'",
                                  lineno, 1);
            }
            std::string name = strip(rest.substr(0, eq));
            std::string expr = strip(rest.substr(eq + 1));
            if (name.empty() || expr.empty()) {
                throw parse_error("poly directive must name a polynomial and give an expression",
                                  lineno, 1);
            }
            pending.push_back({name, expr, lineno});
        } else if (keyword == "exp") {
            size_t eq = rest.find('=');
            std::string val = eq == std::string::npos ? rest : strip(rest.substr(eq + 1));
            try {
                long v = std::stol(val);
                if (v < 1) throw std::out_of_range("");
                exponents.push_back(static_cast<unsigned>(v));
            } catch (const std::exception&) {
                throw parse_error("invalid exponent '" + val + "'", lineno, 1);
            }
        } else if (keyword == "theorems") {
            for (const auto& t : split_list(rest)) theorems.push_back(t);
        } else {
            throw parse_error("unknown directive '" + keyword + "'", lineno, 1);
        }
    }
    (void)conductor_seen;
    if (pending.empty()) {
        throw parse_error("system file declares no polynomials", lineno == 0 ? 1 : lineno, 1);
    }
    if (!exponents.empty() && exponents.size() != pending.size()) {
        throw parse_error("exponent count (" + std::to_string(exponents.size()) +
                              ") does not match polynomial count (" +
                              std::to_string(pending.size()) + ")",
                          lineno, 1);
    }

    SystemFile out;
    out.conductor = conductor;
    out.var_names = var_names;
    out.context = make_context(conductor, var_names);
    out.exponents = exponents;
    out.theorems = theorems;
    for (const auto& p : pending) {
        try {
            out.polys.push_back(parse_expression(p.expr, out.context));
        } catch (const parse_error& e) {
            // Re-anchor to the file line of the offending directive.
            throw parse_error(std::string(e.what()) + " (in poly " + p.name + ")",
                              p.line, e.column);
        }
        out.poly_names.push_back(p.name);
    }
    return out;
}

std::string write_system_file(const SystemFileData& data) {
    std::ostringstream out;
    for (const auto& c : data.comments) out << "# " << c << "\n";
    out << "field m=" << data.conductor << "\n";
    if (!data.var_names.empty()) {
        out << "vars ";
        for (size_t i = 0; i < data.var_names.size(); ++i) {
            if (i) out << ",";
            out << data.var_names[i];
        }
        out << "\n";
    }
    for (const auto& [name, expr] : data.polys) {
        out << "poly " << name << " = " << expr << "\n";
    }
    for (size_t i = 0; i < data.exponents.size(); ++i) {
        out << "exp e" << (i + 1) << " = " << data.exponents[i] << "\n";
    }
    if (!data.theorems.empty()) {
        out << "theorems ";
        for (size_t i = 0; i < data.theorems.size(); ++i) {
            if (i) out << ",";
            out << data.theorems[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace abcpoly
