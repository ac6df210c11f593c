#include "cubicrank/textio.hpp"

#include <array>
#include <cctype>
#include <map>
#include <utility>

namespace cubicrank {

SyntaxError::SyntaxError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

NotHomogeneousDegree3::NotHomogeneousDegree3(const std::string& what)
    : std::runtime_error(what) {}

UnsupportedRadical::UnsupportedRadical(const std::string& what)
    : std::runtime_error(what) {}

namespace {

// Sparse polynomial in x, y, z: exponent triple -> coefficient.
using Expo = std::array<int, 3>;
using Poly = std::map<Expo, Scalar>;

void add_in(Poly& p, const Expo& e, const Scalar& c) {
    Scalar& slot = p[e];
    slot += c;
    if (slot.is_zero()) p.erase(e);
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            add_in(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

bool is_constant(const Poly& p) {
    return p.empty() || (p.size() == 1 && p.begin()->first == Expo{0, 0, 0});
}

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw SyntaxError(what, at);
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool done() {
        skip_ws();
        return i == s.size();
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }

    bool at_atom() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' ||
               c == 'y' || c == 'z' || c == 's' || c == '(';
    }

    Int read_digits(const char* context) {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start) fail(std::string("expected digits ") + context, start);
        return Int(s.substr(start, i - start));
    }

    Poly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = parse_term();
        if (neg)
            for (auto& [e, c] : acc) c = -c;
        for (;;) {
            if (eat('+')) {
                for (const auto& [e, c] : parse_term()) add_in(acc, e, c);
            } else if (eat('-')) {
                for (const auto& [e, c] : parse_term()) add_in(acc, e, -c);
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                acc = mul(acc, parse_factor());
            } else if (peek() == '/') {
                std::size_t at = i;
                ++i;
                Poly d = parse_factor();
                const Scalar value =
                    d.empty() ? Scalar(0) : d.begin()->second;
                if (!is_constant(d) || value.is_zero())
                    fail("division requires a nonzero constant divisor", at);
                for (auto& [e, c] : acc) c = c / value;
            } else if (at_atom()) {
                acc = mul(acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        while (eat('^')) {
            std::size_t at = i;
            Int n = read_digits("after '^'");
            if (n > 99) fail("exponent too large", at);
            Poly r = {{Expo{0, 0, 0}, Scalar(1)}};
            for (Int k = 0; k < n; ++k) r = mul(r, base);
            base = std::move(r);
        }
        return base;
    }

    Poly parse_atom() {
        char c = peek();
        std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {{Expo{0, 0, 0}, Scalar(Rational(read_digits("")))}};
        if (c == 'x' || c == 'y' || c == 'z') {
            ++i;
            Expo e{0, 0, 0};
            e[c == 'x' ? 0 : (c == 'y' ? 1 : 2)] = 1;
            return {{e, Scalar(1)}};
        }
        if (c == 's') {
            if (s.compare(i, 4, "sqrt") != 0) fail("unexpected character", at);
            i += 4;
            if (!eat('(')) fail("expected '(' after sqrt", i);
            Int d = read_digits("inside sqrt()");
            if (!eat(')')) fail("expected ')' after sqrt radicand", i);
            try {
                return {{Expo{0, 0, 0}, Scalar(Rational(0), Rational(1), d)}};
            } catch (const InvalidRadicand& e) {
                throw UnsupportedRadical(e.what());
            } catch (const NotCertifiedSquarefree& e) {
                throw UnsupportedRadical(e.what());
            }
        }
        if (c == '(') {
            ++i;
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'", i);
            return inner;
        }
        if (c == '\0') fail("unexpected end of input", at);
        fail("unexpected character", at);
    }
};

Poly parse_poly(const std::string& text) {
    Parser p{text};
    Poly r = p.parse_expr();
    if (!p.done()) p.fail("unexpected trailing input", p.i);
    // Radicals in disjoint monomials never meet arithmetically, so the
    // one-radicand rule needs an explicit sweep.
    Int seen = 0;
    for (const auto& [e, c] : r) {
        if (c.tower() == 0) continue;
        if (seen == 0)
            seen = c.tower();
        else if (seen != c.tower())
            throw UnsupportedRadical("cannot mix sqrt(" + seen.str() +
                                     ") and sqrt(" + c.tower().str() +
                                     ") in one polynomial");
    }
    return r;
}

constexpr std::array<Expo, 10> kCubicExpo = {
    Expo{3, 0, 0}, Expo{2, 1, 0}, Expo{2, 0, 1}, Expo{1, 2, 0}, Expo{1, 1, 1},
    Expo{1, 0, 2}, Expo{0, 3, 0}, Expo{0, 2, 1}, Expo{0, 1, 2}, Expo{0, 0, 3}};

std::size_t cubic_index(const Expo& e) {
    for (std::size_t k = 0; k < kCubicExpo.size(); ++k)
        if (kCubicExpo[k] == e) return k;
    throw NotHomogeneousDegree3(
        "term of degree " + std::to_string(e[0] + e[1] + e[2]) +
        " in what should be a homogeneous cubic");
}

// Renders one term into out, choosing the separator from the sign when the
// coefficient is rational and parenthesizing it when it carries a radical.
void append_term(std::string& out, const Scalar& c, const std::string& mono) {
    if (c.is_zero()) return;
    const bool first = out.empty();
    if (c.is_rational()) {
        Rational r = c.rat();
        const bool neg = r < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) r = -r;
        if (r != 1) {
            out += to_string(r);
            out += "*";
        }
        out += mono;
    } else {
        if (!first) out += " + ";
        out += "(" + to_string(c) + ")*" + mono;
    }
}

std::string finish(std::string out) { return out.empty() ? "0" : out; }

} // namespace

TernaryCubic parse_cubic(const std::string& text) {
    try {
        TernaryCubic f;
        for (const auto& [e, c] : parse_poly(text)) {
            if (c.is_zero()) continue;  // an explicit zero literal
            f[cubic_index(e)] = c;
        }
        return f;
    } catch (const FieldMismatch& e) {
        throw UnsupportedRadical(e.what());
    }
}

BinaryCubic parse_binary_cubic(const std::string& text) {
    std::size_t z = text.find('z');
    if (z != std::string::npos)
        throw SyntaxError("variable z is not allowed in a binary form", z);
    try {
        BinaryCubic f;
        for (const auto& [e, c] : parse_poly(text)) {
            if (c.is_zero()) continue;  // an explicit zero literal
            if (e[0] + e[1] != 3)
                throw NotHomogeneousDegree3(
                    "term of degree " + std::to_string(e[0] + e[1]) +
                    " in what should be a homogeneous binary cubic");
            f[static_cast<std::size_t>(e[1])] = c;
        }
        return f;
    } catch (const FieldMismatch& e) {
        throw UnsupportedRadical(e.what());
    }
}

std::string to_string(const LinearForm& l) {
    std::string out;
    append_term(out, l.a, "x");
    append_term(out, l.b, "y");
    append_term(out, l.c, "z");
    return finish(std::move(out));
}

std::string to_string(const TernaryQuadratic& f) {
    static const std::array<std::string, 6> names = {"x^2", "x*y", "x*z",
                                                     "y^2", "y*z", "z^2"};
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k)
        append_term(out, f[k], names[k]);
    return finish(std::move(out));
}

std::string to_string(const TernaryCubic& f) {
    static const std::array<std::string, 10> names = {
        "x^3",   "x^2*y", "x^2*z", "x*y^2", "x*y*z",
        "x*z^2", "y^3",   "y^2*z", "y*z^2", "z^3"};
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k)
        append_term(out, f[k], names[k]);
    return finish(std::move(out));
}

std::string to_string(const BinaryCubic& f) {
    static const std::array<std::string, 4> names = {"x^3", "x^2*y", "x*y^2",
                                                     "y^3"};
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k)
        append_term(out, f[k], names[k]);
    return finish(std::move(out));
}

} // namespace cubicrank
