#include "hitbox/parse.hpp"

#include <cctype>
#include <string>

namespace hitbox {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : s_(text) {}

    BiPoly parse() {
        BiPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
        return p;
    }

    bool saw_t() const { return saw_t_; }
    std::size_t t_position() const { return t_pos_; }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Integer digits() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    BiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = primary();
        if (accept('^')) {
            const Integer e = digits();
            if (e > 4096) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    BiPoly primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            BiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'T' || c == 't') {
            if (!saw_t_) t_pos_ = i_;
            saw_t_ = true;
            ++i_;
            return BiPoly::constant(QPoly::x());
        }
        if (c == 'X' || c == 'x') {
            ++i_;
            return BiPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            Integer den = 1;
            skip();
            // a/b is a literal, not an operator.
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                den = digits();
                if (den == 0) fail("zero denominator");
            }
            return BiPoly::constant(QPoly::constant(Rational::normalize(num, den)));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
    bool saw_t_ = false;
    std::size_t t_pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse(); }

QPoly parse_xpoly(std::string_view text) {
    Parser parser(text);
    BiPoly p = parser.parse();
    if (parser.saw_t()) throw ParseError("variable T not allowed in a univariate polynomial", parser.t_position());
    return specialize(p, Rational(0));
}

}  // namespace hitbox
