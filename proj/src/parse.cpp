#include "gmact/parse.hpp"
#include "gmact/errors.hpp"

#include <cctype>

namespace gmact {
namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& text;
    size_t pos = 0;

    Parser(const RingPtr& r, const std::string& t) : ring(r), text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos); }

    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        throw parse_error(msg, 1, at + 1);
    }

    void skip_ws() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Integer parse_natural() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected a number");
        return Integer(text.substr(start, pos - start));
    }

    long parse_exponent() {
        Integer n = parse_natural();
        if (!n.fits_slong_p())
            fail("exponent too large");
        return n.get_si();
    }

    Polynomial parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_natural();
            if (peek() == '/') {
                ++pos;
                Integer den = parse_natural();
                if (den == 0)
                    fail("zero denominator");
                return Polynomial::constant(ring, make_rational(num, den));
            }
            return Polynomial::constant(ring, Rational(num));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (!ring->has_var(name))
                fail_at("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring, name);
        }
        fail("unexpected character");
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (eat('^')) {
            long e = parse_exponent();
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                p = p * parse_factor();
            } else if (c == '(' || isalpha(static_cast<unsigned char>(c)) || c == '_') {
                // implicit product, e.g. "2x" or "x(y+1)"
                p = p * parse_factor();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_expr() {
        Polynomial total = Polynomial::zero(ring);
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        while (true) {
            Polynomial t = parse_term();
            total = negate ? total - t : total + t;
            char c = peek();
            if (c == '+') {
                ++pos;
                negate = false;
            } else if (c == '-') {
                ++pos;
                negate = true;
            } else {
                break;
            }
        }
        return total;
    }

    Polynomial run() {
        skip_ws();
        if (pos == text.size())
            fail("empty polynomial");
        Polynomial p = parse_expr();
        skip_ws();
        if (pos != text.size())
            fail("trailing input");
        return p;
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

} // namespace gmact
