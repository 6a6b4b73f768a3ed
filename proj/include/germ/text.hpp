#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Parse failure with 1-based source position.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

/// Canonical polynomial printing: terms in descending grevlex, explicit `*`
/// and `^`, rational coefficients as `a/b`.  Inverse of parse_polynomial on
/// its own output.
inline std::string print_polynomial(const Polynomial& f, const std::vector<std::string>& names) {
    if (names.size() != f.nvars())
        throw std::invalid_argument("print_polynomial: name count mismatch");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
        }
        if (vars.empty()) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << vars;
        } else {
            out << to_string(mag) << "*" << vars;
        }
    }
    return out.str();
}

namespace detail {

class PolynomialParser {
  public:
    PolynomialParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    Polynomial expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            advance();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '+' || c == '-') {
                advance();
                Polynomial t = term();
                if (c == '-')
                    acc -= t;
                else
                    acc += t;
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                advance();
                acc = acc * factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                fail("missing '*' (juxtaposition is not multiplication)");
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected non-negative integer exponent after '^'");
            const long e = integer_literal();
            if (e > 512) fail("exponent too large");
            base = base.pow(static_cast<int>(e));
            skip_ws();
            if (peek() == '^') fail("chained '^' requires parentheses");
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            advance();
            Polynomial p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            advance();
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_literal() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty()) fail("expected integer");
        if (digits.size() > 9) fail("integer literal too large for exponent position");
        return std::stol(digits);
    }

    Polynomial number() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        Integer num(digits);
        Integer den(1);
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            std::string dd;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                dd += peek();
                advance();
            }
            if (dd.empty()) fail("expected denominator digits after '/'");
            den = Integer(dd);
            if (den == 0) fail("zero denominator");
        }
        return Polynomial::constant(names_.size(), Rational(num, den));
    }

    Polynomial identifier() {
        const int at_line = line_, at_col = col_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            name += peek();
            advance();
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return Polynomial::variable(names_.size(), i);
        throw ParseError("unknown variable '" + name + "'", at_line, at_col);
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

/// Parse the polynomial text syntax: identifiers, `+ - * ^`, rational
/// literals `a/b` or integers, explicit `*` required.
inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
    return detail::PolynomialParser(text, names).parse();
}

}  // namespace germ
