#include "nisv/parser.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace nisv {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            // must not be a prefix of a longer identifier
            size_t end = pos_ + w.size();
            if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) {
                return false;
            }
            pos_ = end;
            return true;
        }
        return false;
    }
    double number() {
        skip_ws();
        size_t used = 0;
        try {
            double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            return v;
        } catch (const std::exception&) {
            fail("expected a number");
        }
        return 0.0;
    }
    int integer() {
        double v = number();
        int i = static_cast<int>(std::lround(v));
        if (std::abs(v - i) > 1e-12) fail("expected an integer");
        return i;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("symbol parse error at position " + std::to_string(pos_) + ": " + why +
                                    " in \"" + s_ + "\"");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

Cplx parse_cnum(Cursor& c) {
    if (c.accept_word("expi")) {
        c.expect('(');
        double x = c.number();
        c.expect(')');
        return Cplx(std::cos(x), std::sin(x));
    }
    if (c.accept_word("i")) return Cplx(0.0, 1.0);
    bool neg = false;
    if (c.peek() == '-') {
        c.accept('-');
        if (c.accept_word("i")) return Cplx(0.0, -1.0);
        neg = true;
    }
    double re = c.number();
    if (neg) re = -re;
    if (c.accept_word("i")) return Cplx(0.0, re);
    char nxt = c.peek();
    if (nxt == '+' || nxt == '-') {
        bool minus = nxt == '-';
        c.accept(nxt);
        if (c.accept_word("i")) return Cplx(re, minus ? -1.0 : 1.0);
        double im = c.number();
        if (c.accept_word("i")) return Cplx(re, minus ? -im : im);
        c.fail("trailing term is not imaginary");
    }
    return Cplx(re, 0.0);
}

// Polynomial expression over one variable, evaluated in Poly arithmetic.
class PolyParser {
public:
    PolyParser(Cursor& c, char var) : c_(c), var_(var) {}

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (c_.peek() == '+') {
                c_.accept('+');
                acc = acc + term();
            } else if (c_.peek() == '-') {
                c_.accept('-');
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

private:
    Poly term() {
        Poly acc = factor();
        while (c_.peek() == '*') {
            c_.accept('*');
            acc = acc * factor();
        }
        return acc;
    }
    Poly factor() {
        Poly base = atom();
        if (c_.peek() == '^') {
            c_.accept('^');
            int k = c_.integer();
            if (k < 0) c_.fail("negative power inside a polynomial");
            base = base.pow(k);
        }
        return base;
    }
    Poly atom() {
        if (c_.accept('(')) {
            Poly p = expr();
            c_.expect(')');
            return p;
        }
        if (c_.peek() == '-') {
            c_.accept('-');
            return atom() * Cplx(-1.0);
        }
        if (c_.accept_word(std::string(1, var_))) return Poly::variable();
        if (c_.accept_word("i")) return Poly::constant(Cplx(0.0, 1.0));
        double v = c_.number();
        if (c_.accept_word("i")) return Poly::constant(Cplx(0.0, v));
        return Poly::constant(Cplx(v, 0.0));
    }
    Cursor& c_;
    char var_;
};

RationalFn parse_rational_body(Cursor& c, char var) {
    PolyParser pp(c, var);
    Poly num = pp.expr();
    Poly den = Poly::constant(Cplx(1.0));
    while (c.peek() == '/') {
        c.accept('/');
        if (!c.accept('(')) c.fail("denominator must be parenthesized");
        PolyParser pd(c, var);
        den = den * pd.expr();
        c.expect(')');
    }
    return RationalFn(num, den);
}

class SymbolParser {
public:
    explicit SymbolParser(Cursor& c) : c_(c) {}

    SymbolExpr expr() {
        SymbolExpr acc = term();
        while (c_.peek() == '*') {
            c_.accept('*');
            acc = acc * term();
        }
        return acc;
    }

private:
    SymbolExpr term() {
        SymbolExpr base = factor();
        if (c_.peek() == '^') {
            c_.accept('^');
            return base.pow(c_.integer());
        }
        return base;
    }
    SymbolExpr factor() {
        if (c_.accept('(')) {
            SymbolExpr e = expr();
            c_.expect(')');
            return e;
        }
        if (c_.accept_word("blaschke")) {
            c_.expect('(');
            Cplx a = parse_cnum(c_);
            Cplx lam(1.0, 0.0);
            if (c_.accept(',')) lam = parse_cnum(c_);
            c_.expect(')');
            return SymbolExpr::mobius(Automorphism(a, lam));
        }
        if (c_.accept_word("phi")) {
            c_.expect('(');
            double t = c_.number();
            c_.expect(')');
            return SymbolExpr::singular_inner(t);
        }
        if (c_.accept_word("conjz")) {
            int k = 1;
            if (c_.peek() == '^') {
                c_.accept('^');
                k = c_.integer();
            }
            return SymbolExpr::conj_z_pow(k);
        }
        if (c_.accept_word("conj")) {
            c_.expect('(');
            SymbolExpr e = expr();
            c_.expect(')');
            return SymbolExpr::conj_on_circle(e);
        }
        if (c_.accept_word("compose")) {
            c_.expect('(');
            SymbolExpr f = expr();
            c_.expect(',');
            SymbolExpr g = expr();
            c_.expect(')');
            return SymbolExpr::compose(f, g);
        }
        if (c_.accept_word("rat")) {
            c_.expect('(');
            RationalFn r = parse_rational_body(c_, 'z');
            c_.expect(')');
            return SymbolExpr::rational(r);
        }
        if (c_.accept_word("z")) return SymbolExpr::z();
        if (c_.accept_word("i")) return SymbolExpr::constant(Cplx(0.0, 1.0));
        double v = c_.number();
        if (c_.accept_word("i")) return SymbolExpr::constant(Cplx(0.0, v));
        return SymbolExpr::constant(Cplx(v, 0.0));
    }
    Cursor& c_;
};

} // namespace

SymbolExpr parse_symbol(const std::string& text) {
    Cursor c(text);
    SymbolParser p(c);
    SymbolExpr e = p.expr();
    if (!c.eof()) c.fail("trailing input");
    return e;
}

HalfPlaneRational parse_halfplane(const std::string& text) {
    // Split off exp(-D*s) delay factors, parse the rest as a rational in s.
    std::string body;
    double delay = 0.0;
    size_t i = 0;
    while (i < text.size()) {
        if (text.compare(i, 4, "exp(") == 0) {
            size_t close = text.find(')', i);
            if (close == std::string::npos) {
                throw std::invalid_argument("parse_halfplane: unterminated exp(...)");
            }
            std::string inside = text.substr(i + 4, close - i - 4);
            // accepted forms: -D*s or -s
            size_t star = inside.find("*s");
            double d;
            if (inside == "-s") {
                d = 1.0;
            } else if (star != std::string::npos) {
                d = -std::stod(inside.substr(0, star));
            } else {
                throw std::invalid_argument("parse_halfplane: exp factor must look like exp(-d*s)");
            }
            if (d < 0.0) throw std::invalid_argument("parse_halfplane: delay must be nonnegative");
            delay += d;
            i = close + 1;
            if (i < text.size() && text[i] == '*') ++i;
        } else {
            body.push_back(text[i]);
            ++i;
        }
    }
    while (!body.empty() && body.back() == '*') body.pop_back();
    if (body.empty()) body = "1";
    Cursor c(body);
    RationalFn r = parse_rational_body(c, 's');
    if (!c.eof()) c.fail("trailing input");
    return HalfPlaneRational{r, delay};
}

Cplx parse_complex(const std::string& text) {
    Cursor c(text);
    Cplx v = parse_cnum(c);
    if (!c.eof()) c.fail("trailing input");
    return v;
}

RationalFn parse_rational(const std::string& text, char var) {
    Cursor c(text);
    RationalFn r = parse_rational_body(c, var);
    if (!c.eof()) c.fail("trailing input");
    return r;
}

} // namespace nisv
