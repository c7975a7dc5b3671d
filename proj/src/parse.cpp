#include "bdgalois/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace bdgalois {

namespace {

using RF = RationalFunction<Rational>;

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RF parse() {
        RF v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    RF expr() {
        RF v = term();
        for (;;) {
            skip_ws();
            if (match('+')) v += term();
            else if (match('-')) v -= term();
            else return v;
        }
    }

    RF term() {
        RF v = factor();
        for (;;) {
            skip_ws();
            if (match('*')) v *= factor();
            else if (match('/')) {
                RF d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RF factor() {
        skip_ws();
        if (match('-')) {
            RF v = factor();
            return -v;
        }
        if (match('+')) return factor();
        RF base = atom();
        skip_ws();
        if (match('^')) {
            skip_ws();
            long e = integer_literal();
            return base.pow(e);
        }
        return base;
    }

    RF atom() {
        skip_ws();
        if (match('(')) {
            RF v = expr();
            skip_ws();
            if (!match(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (c == 'x' || c == 'z') {
            ++pos_;
            return RF(Polynomial<Rational>::variable());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RF(Rational(mpz_class(digits())));
        fail("expected number, variable or '('");
        return {};
    }

    long integer_literal() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
        std::string d = digits();
        try {
            return std::stol(d);
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
        return 0;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool match(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    msg);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction<Rational> parse_rational_function(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace bdgalois
