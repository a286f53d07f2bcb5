#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/multipoly.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Recursive-descent parser for polynomial expressions with rational
// coefficients, explicit '*', '^' powers with nonnegative integer exponents,
// division by constant subexpressions, and parentheses.  Variable names are
// supplied by the caller together with the index they map to, so aliases
// (x ~ x1) are possible.
class ExprParser {
public:
    ExprParser(std::string text, std::vector<std::pair<std::string, int>> names, int nvars,
               int line = -1)
        : s_(std::move(text)), names_(std::move(names)), nvars_(nvars), line_(line) {}

    PolyRat parse() {
        pos_ = 0;
        PolyRat p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input '" + s_.substr(pos_) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    PolyRat expr() {
        PolyRat acc(nvars_);
        int sign = 1;
        if (eat('+')) {
        } else if (eat('-')) {
            sign = -1;
        }
        for (;;) {
            PolyRat t = term();
            acc = sign < 0 ? acc - t : acc + t;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        return acc;
    }

    PolyRat term() {
        PolyRat acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                PolyRat d = factor();
                Rat c = d.constant_term();
                if (d.term_count() > 1) fail("division is only supported by constants");
                if (is_zero(c)) fail("division by zero");
                acc = acc.scaled(Rat(1) / c);
            } else {
                break;
            }
        }
        return acc;
    }

    PolyRat factor() {
        PolyRat base = atom();
        while (eat('^')) {
            long e = nat_literal();
            PolyRat p = PolyRat::constant(nvars_, Rat(1));
            for (long i = 0; i < e; ++i) p = p * base;
            base = p;
        }
        return base;
    }

    PolyRat atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            PolyRat p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (c == '+') {
            ++pos_;
            return atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyRat::constant(nvars_, Rat(int_literal()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            for (const auto& [nm, idx] : names_)
                if (nm == name) return PolyRat::variable(nvars_, idx);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Int int_literal() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) fail("expected an integer");
        return Int(digits, 10);
    }

    long nat_literal() {
        Int v = int_literal();
        if (!v.fits_slong_p() || v.get_si() < 0) fail("exponent out of range");
        return v.get_si();
    }

    std::string s_;
    std::vector<std::pair<std::string, int>> names_;
    int nvars_;
    int line_;
    std::size_t pos_ = 0;
};

// Parse a polynomial in x1..xn (aliases x,y,z for x1,x2,x3) and, when
// with_t is set, the parameter t as the last variable (index n).
inline PolyRat parse_problem_poly(const std::string& text, int n, bool with_t, int line = -1) {
    std::vector<std::pair<std::string, int>> names;
    const char* alias[3] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) {
        names.emplace_back("x" + std::to_string(i + 1), i);
        if (i < 3) names.emplace_back(alias[i], i);
    }
    int nvars = n + (with_t ? 1 : 0);
    if (with_t) names.emplace_back("t", n);
    return ExprParser(text, std::move(names), nvars, line).parse();
}

} // namespace pfk
