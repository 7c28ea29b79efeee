#include "chow/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "chow/errors.hpp"

namespace chow {
namespace {

// dense polynomials over the field, coefficients low to high
using Poly = std::vector<FieldElement>;

void normalize(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return (int)p.size() - 1; }

Poly poly_const(const FieldElement& c) {
    Poly p{c};
    normalize(p);
    return p;
}

Poly poly_add(const FieldPtr& ctx, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), FieldElement::zero(ctx));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    normalize(r);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

Poly poly_mul(const FieldPtr& ctx, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, FieldElement::zero(ctx));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    normalize(r);
    return r;
}

FieldElement poly_eval(const FieldPtr& ctx, const Poly& p, const FieldElement& x0) {
    FieldElement v = FieldElement::zero(ctx);
    for (size_t i = p.size(); i-- > 0;) v = v * x0 + p[i];
    return v;
}

// divide p by (x - r); remainder must be zero
Poly poly_deflate(const FieldPtr& ctx, const Poly& p, const FieldElement& r) {
    Poly q(p.size() - 1, FieldElement::zero(ctx));
    FieldElement carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    normalize(q);
    return q;
}

Poly poly_rem(const FieldPtr& ctx, Poly a, const Poly& b) {
    while (degree(a) >= degree(b)) {
        FieldElement f = a.back() * b.back().inverse();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - f * b[i];
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(const FieldPtr& ctx, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_rem(ctx, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

Poly poly_div_exact(const FieldPtr& ctx, Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, FieldElement::zero(ctx));
    while (degree(a) >= degree(b)) {
        FieldElement f = a.back() * b.back().inverse();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - f * b[i];
        normalize(a);
    }
    return q;
}

// a rational expression value with root hints gathered along the way
struct Frac {
    Poly num, den;
    std::vector<FieldElement> hints;
};

void add_hint(std::vector<FieldElement>& hints, const FieldElement& r) {
    for (auto& h : hints)
        if (h == r) return;
    hints.push_back(r);
}

void harvest_hints(const FieldPtr& ctx, Frac& f) {
    for (const Poly* p : {&f.num, &f.den})
        if (degree(*p) == 1) add_hint(f.hints, -(*p)[0] * (*p)[1].inverse());
}

struct Parser {
    FieldPtr ctx;
    const std::string& text;
    size_t pos = 0;

    explicit Parser(FieldPtr c, const std::string& t) : ctx(std::move(c)), text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start || !std::isdigit((unsigned char)text[pos - 1]))
            throw parse_error("expected integer", start);
        return std::stoll(text.substr(start, pos - start));
    }

    // balanced-paren substring for a field element argument
    FieldElement element_until(char close, char alt = '\0') {
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')' && depth > 0) {
                --depth;
                ++pos;
                continue;
            }
            if (depth == 0 && (c == close || (alt && c == alt))) break;
            ++pos;
        }
        if (pos >= text.size()) throw parse_error("unterminated argument", start);
        std::string piece = text.substr(start, pos - start);
        try {
            return FieldElement::parse(ctx, piece);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), start + e.pos);
        }
    }

    // ---- coordinate expressions ----

    Frac coord_expr() {
        Frac v = coord_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return v;
            ++pos;
            Frac o = coord_term();
            Poly num = c == '+' ? poly_add(ctx, poly_mul(ctx, v.num, o.den),
                                           poly_mul(ctx, o.num, v.den))
                                : poly_add(ctx, poly_mul(ctx, v.num, o.den),
                                           poly_neg(poly_mul(ctx, o.num, v.den)));
            v.num = std::move(num);
            v.den = poly_mul(ctx, v.den, o.den);
            for (auto& h : o.hints) add_hint(v.hints, h);
            harvest_hints(ctx, v);
        }
    }

    Frac coord_term() {
        Frac v = coord_factor();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') return v;
            ++pos;
            Frac o = coord_factor();
            if (c == '*') {
                v.num = poly_mul(ctx, v.num, o.num);
                v.den = poly_mul(ctx, v.den, o.den);
            } else {
                if (o.num.empty()) throw parse_error("division by zero", pos);
                v.num = poly_mul(ctx, v.num, o.den);
                v.den = poly_mul(ctx, v.den, o.num);
            }
            for (auto& h : o.hints) add_hint(v.hints, h);
            harvest_hints(ctx, v);
        }
    }

    Frac coord_factor() {
        Frac v = coord_base();
        if (peek() == '^') {
            ++pos;
            long long e = integer();
            Frac r;
            r.num = poly_const(FieldElement::one(ctx));
            r.den = r.num;
            r.hints = v.hints;
            bool invert = e < 0;
            for (long long k = 0; k < (invert ? -e : e); ++k) {
                r.num = poly_mul(ctx, r.num, v.num);
                r.den = poly_mul(ctx, r.den, v.den);
            }
            if (invert) std::swap(r.num, r.den);
            return r;
        }
        return v;
    }

    Frac coord_base() {
        char c = peek();
        Frac v;
        v.den = poly_const(FieldElement::one(ctx));
        if (c == '-') {
            ++pos;
            Frac o = coord_base();
            o.num = poly_neg(o.num);
            return o;
        }
        if (c == '(') {
            ++pos;
            Frac o = coord_expr();
            expect(')');
            return o;
        }
        if (c == 'x') {
            ++pos;
            v.num = {FieldElement::zero(ctx), FieldElement::one(ctx)};
            add_hint(v.hints, FieldElement::zero(ctx));
            return v;
        }
        if (c == 'g') {
            ++pos;
            v.num = poly_const(FieldElement::root_of_unity(ctx, ctx->conductor()));
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            long long n = integer();
            v.num = poly_const(FieldElement::from_rational(ctx, Rational((long)n)));
            return v;
        }
        throw parse_error("expected coordinate expression", pos);
    }

    FactoredRational to_rational(Frac f, size_t at) {
        normalize(f.num);
        normalize(f.den);
        if (f.num.empty()) throw parse_error("coordinate is identically zero", at);
        if (f.den.empty()) throw parse_error("coordinate has zero denominator", at);
        Poly g = poly_gcd(ctx, f.num, f.den);
        if (degree(g) > 0) {
            f.num = poly_div_exact(ctx, f.num, g);
            f.den = poly_div_exact(ctx, f.den, g);
        }
        FieldElement unit = FieldElement::one(ctx);
        std::map<FieldElement, int> factors;
        for (int sign : {1, -1}) {
            Poly p = sign == 1 ? f.num : f.den;
            while (degree(p) > 1) {
                bool found = false;
                for (auto& r : f.hints) {
                    if (poly_eval(ctx, p, r).is_zero()) {
                        factors[r] += sign;
                        p = poly_deflate(ctx, p, r);
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw unsupported_shape_error(
                        "coordinate does not factor into visible linear pieces");
            }
            if (degree(p) == 1) {
                factors[-p[0] * p[1].inverse()] += sign;
                unit = sign == 1 ? unit * p[1] : unit * p[1].inverse();
            } else {
                unit = sign == 1 ? unit * p[0] : unit * p[0].inverse();
            }
        }
        std::vector<std::pair<FieldElement, int>> fl;
        for (auto& [r, e] : factors)
            if (e != 0) fl.push_back({r, e});
        return FactoredRational::make(unit, fl);
    }

    FactoredRational coordinate() {
        size_t at = pos;
        return to_rational(coord_expr(), at);
    }

    CurveTerm bracket() {
        expect('[');
        FactoredRational f1 = coordinate();
        expect(',');
        FactoredRational f2 = coordinate();
        expect(',');
        FactoredRational f3 = coordinate();
        expect(']');
        return CurveTerm(f1, f2, f3);
    }

    // ---- cycle sums ----

    CurveTerm atom() {
        char c = peek();
        if (c == '[') return bracket();
        if (c == 'C') {
            ++pos;
            expect('(');
            FieldElement a = element_until(')');
            expect(')');
            return totaro_curve(a);
        }
        if (c == 'Z') {
            ++pos;
            expect('(');
            FieldElement a = element_until(',');
            expect(',');
            FieldElement b = element_until(')');
            expect(')');
            return z_curve(a, b);
        }
        throw parse_error("expected C(...), Z(...), or a bracket triple", pos);
    }

    CurveSum sum() {
        CurveSum s;
        bool first = true;
        while (true) {
            char c = peek();
            if (c == '\0') {
                if (first) throw parse_error("empty expression", pos);
                return s;
            }
            long long sign = 1;
            if (c == '+' || c == '-') {
                ++pos;
                if (c == '-') sign = -1;
            } else if (!first) {
                throw parse_error("expected '+' or '-' between terms", pos);
            }
            long long coeff = 1;
            if (std::isdigit((unsigned char)peek())) {
                coeff = integer();
                eat('*');
            }
            add_canonical(s, atom(), sign * coeff);
            first = false;
        }
    }
};

}  // namespace

CurveSum parse_cycle_sum(const FieldPtr& ctx, const std::string& text) {
    Parser p(ctx, text);
    CurveSum s = p.sum();
    if (p.peek() != '\0') throw parse_error("trailing input", p.pos);
    return s;
}

CurveTerm parse_bracket_term(const FieldPtr& ctx, const std::string& text) {
    Parser p(ctx, text);
    CurveTerm t = p.bracket();
    if (p.peek() != '\0') throw parse_error("trailing input", p.pos);
    return t;
}

FactoredRational parse_coordinate(const FieldPtr& ctx, const std::string& text) {
    Parser p(ctx, text);
    FactoredRational f = p.coordinate();
    if (p.peek() != '\0') throw parse_error("trailing input", p.pos);
    return f;
}

}  // namespace chow
