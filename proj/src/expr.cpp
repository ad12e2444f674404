#include "galwalks/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace gw {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& allowed;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("expression error at position " + std::to_string(pos) + ": " + msg);
    }

    Frac parse() {
        Frac e = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return e;
    }

    Frac expr() {
        Frac acc = peek() == '-' ? (eat('-'), -term()) : (eat('+'), term());
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Frac term() {
        Frac acc = factor();
        while (true) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/')) {
                Frac d = factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else
                return acc;
        }
    }

    Frac factor() {
        if (eat('-')) return -factor();
        Frac base = atom();
        if (eat('^')) {
            long k = integer();
            if (k < 0) fail("negative exponent");
            Frac r(Rational(1));
            for (long i = 0; i < k; ++i) r *= base;
            return r;
        }
        return base;
    }

    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    Frac atom() {
        skip();
        if (eat('(')) {
            Frac e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Frac(Rational(Integer(s.substr(start, pos - start)), Integer(1)));
        }
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (const auto& a : allowed)
                if (a == name) return Frac::var(VarTable::instance().id(name));
            fail("unknown name '" + name + "'");
        }
        fail("expected atom");
    }
};

std::string mono_str(const Monomial& m, const Rational& c) {
    std::string out;
    bool coeff_one = (c == 1), coeff_mone = (c == -1);
    bool any_var = !m.is_one();
    if (coeff_mone && any_var)
        out += "-";
    else if (!coeff_one || !any_var) {
        out += c.get_str();
        if (any_var) out += "*";
    }
    bool first = true;
    auto& vt = VarTable::instance();
    for (int v = 0; v < kMaxVars; ++v) {
        if (!m[v]) continue;
        if (!first) out += "*";
        first = false;
        out += vt.name(v);
        if (m[v] > 1) out += "^" + std::to_string(int(m[v]));
    }
    return out;
}

}  // namespace

Frac parse_expr(const std::string& text, const std::vector<std::string>& allowed_vars) {
    Parser p{text, 0, allowed_vars};
    return p.parse();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string ts = mono_str(t.m, t.c);
        if (first) {
            out = ts;
            first = false;
        } else if (!ts.empty() && ts[0] == '-') {
            out += " - " + ts.substr(1);
        } else {
            out += " + " + ts;
        }
    }
    return out;
}

std::string to_string(const Frac& f) {
    if (f.is_poly()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string Poly::str() const { return to_string(*this); }
std::string Frac::str() const { return to_string(*this); }

}  // namespace gw
