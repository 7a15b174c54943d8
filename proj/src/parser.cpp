#include "corrsolve/parser.hpp"

#include <cctype>

#include "corrsolve/errors.hpp"

namespace corrsolve {

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c) throw parse_error(std::string("expected ") + what, pos);
        ++pos;
    }
};

struct Parser {
    Lexer lx;

    Int parse_integer() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        std::string digits;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) digits += lx.s[lx.pos++];
        if (digits.empty()) throw parse_error("expected integer", start);
        return Int(digits);
    }

    BiPoly parse_base() {
        char c = lx.peek();
        std::size_t at = lx.pos;
        if (c == '(') {
            ++lx.pos;
            BiPoly e = parse_expr();
            lx.expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = parse_integer();
            if (lx.peek() == '/') {
                ++lx.pos;
                std::size_t dpos = lx.pos;
                Int d = parse_integer();
                if (d == 0) throw parse_error("zero denominator", dpos);
                return BiPoly(rat(n, d));
            }
            return BiPoly(Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (lower == 'x') {
                ++lx.pos;
                return BiPoly::var_first();
            }
            if (lower == 'y') {
                ++lx.pos;
                return BiPoly::var_second();
            }
            throw parse_error(std::string("unknown variable '") + c + "' (only x and y are allowed)", at);
        }
        if (c == '.') throw parse_error("floating literals are not accepted; use a/b", at);
        throw parse_error("expected variable, literal or '('", at);
    }

    BiPoly parse_factor() {
        BiPoly b = parse_base();
        if (lx.peek() == '^') {
            ++lx.pos;
            std::size_t at = lx.pos;
            if (lx.peek() == '-') throw parse_error("negative exponents are not allowed", at);
            Int e = parse_integer();
            if (lx.peek() == '/' || lx.peek() == '.')
                throw parse_error("exponent must be a nonnegative integer", lx.pos);
            if (!e.fits_uint_p()) throw parse_error("exponent too large", at);
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    BiPoly parse_term() {
        BiPoly t = parse_factor();
        while (lx.peek() == '*') {
            ++lx.pos;
            t = t * parse_factor();
        }
        // catch implicit multiplication like "2x" or "x y"
        char c = lx.peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
            throw parse_error("missing '*' (explicit multiplication required)", lx.pos);
        return t;
    }

    BiPoly parse_expr() {
        bool neg = false;
        if (lx.peek() == '-') {
            neg = true;
            ++lx.pos;
        }
        BiPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++lx.pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

BiPoly parse_bipoly(std::string_view text) {
    Parser p{Lexer{text, 0}};
    if (p.lx.eof()) throw parse_error("empty input", 0);
    BiPoly e = p.parse_expr();
    if (!p.lx.eof()) throw parse_error("unexpected trailing input", p.lx.pos);
    return e;
}

std::string print_canonical(const BiPoly& p) { return p.to_string("x", "y"); }

} // namespace corrsolve
