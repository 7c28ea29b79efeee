#include "chow/numfield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace chow {

namespace {

// Divides a by b (exact polynomial division), both low-to-high.
std::vector<Rational> poly_div_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
        Rational lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
    }
    for (const auto& r : a)
        if (r != 0) throw arithmetic_error("inexact polynomial division");
    return q;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void poly_trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial m.
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& m) {
    std::size_t deg = m.size() - 1;
    while (true) {
        poly_trim(a);
        if (a.size() <= deg) break;
        Rational lead = a.back();
        std::size_t shift = a.size() - 1 - deg;
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    }
    a.resize(deg, Rational(0));
    return a;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    std::vector<Rational> result = num;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto itd = cache.find(d);
        std::vector<Rational> phid;
        if (itd != cache.end()) {
            phid = itd->second;
        } else {
            std::vector<Rational> numd(d + 1, Rational(0));
            numd[0] = -1;
            numd[d] = 1;
            phid = numd;
            for (unsigned e = 1; e < d; ++e)
                if (d % e == 0) phid = poly_div_exact(phid, cache.at(e));
            cache[d] = phid;
        }
        result = poly_div_exact(result, phid);
    }
    cache[n] = result;
    return result;
}

FieldContext::FieldContext(unsigned conductor) : conductor_(conductor) {
    if (conductor == 0) throw invalid_argument_error("conductor must be positive");
    modulus_ = cyclotomic_polynomial(conductor);
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
}

FieldPtr FieldContext::cyclotomic(unsigned conductor) {
    return FieldPtr(new FieldContext(conductor));
}

bool FieldContext::same(const FieldContext& other) const {
    return conductor_ == other.conductor_;
}

void require_same_context(const FieldElement& a, const FieldElement& b) {
    if (!a.context()->same(*b.context()))
        throw context_mismatch_error("operands live in different fields");
}

FieldElement::FieldElement(FieldPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
    c_ = poly_mod(std::move(coeffs), ctx_->modulus());
    for (auto& q : c_) q.canonicalize();
}

FieldElement FieldElement::zero(const FieldPtr& ctx) {
    return FieldElement(ctx, {});
}

FieldElement FieldElement::one(const FieldPtr& ctx) {
    return from_rational(ctx, Rational(1));
}

FieldElement FieldElement::from_rational(const FieldPtr& ctx, const Rational& q) {
    return FieldElement(ctx, {q});
}

FieldElement FieldElement::from_int(const FieldPtr& ctx, long v) {
    return from_rational(ctx, Rational(v));
}

FieldElement FieldElement::zeta_power(const FieldPtr& ctx, long power) {
    long n = ctx->conductor();
    long p = ((power % n) + n) % n;
    std::vector<Rational> c(static_cast<std::size_t>(p) + 1, Rational(0));
    c[static_cast<std::size_t>(p)] = 1;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::root_of_unity(const FieldPtr& ctx, unsigned m) {
    unsigned w = ctx->max_root_order();
    if (m == 0 || w % m != 0)
        throw invalid_argument_error("no primitive root of unity of order " + std::to_string(m) +
                                     " in conductor-" + std::to_string(ctx->conductor()) + " field");
    unsigned n = ctx->conductor();
    if (n % 2 == 1 && m % 2 == 0) {
        // zeta_{2n} = -zeta_n^{(n+1)/2}; a primitive m-th root is a power of it.
        FieldElement z2n = -zeta_power(ctx, (n + 1) / 2);
        return z2n.pow(2 * n / m);
    }
    return zeta_power(ctx, n / m);
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
    return c_.size() <= 1 ||
           std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> FieldElement::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_.empty() ? Rational(0) : c_[0];
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> out(c_);
    for (auto& q : out) q = -q;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_context(*this, o);
    std::vector<Rational> out(c_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_context(*this, o);
    return FieldElement(ctx_, poly_mul(c_, o.c_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of zero");
    // Extended Euclid over Q[x] on (this, modulus).
    std::vector<Rational> r0 = ctx_->modulus(), r1 = c_;
    poly_trim(r1);
    std::vector<Rational> s0 = {}, s1 = {Rational(1)};
    while (true) {
        poly_trim(r1);
        if (r1.size() == 1) break;  // unit remainder; gcd with irreducible modulus
        // r0 = q*r1 + r2
        std::vector<Rational> r2 = r0;
        std::vector<Rational> q(r2.size() - r1.size() + 1, Rational(0));
        while (true) {
            poly_trim(r2);
            if (r2.size() < r1.size()) break;
            Rational lead = r2.back() / r1.back();
            std::size_t shift = r2.size() - r1.size();
            q[shift] += lead;
            for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= lead * r1[i];
        }
        std::vector<Rational> s2 = s0;
        auto qs1 = poly_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational unit = r1[0];
    for (auto& q : s1) q /= unit;
    return FieldElement(ctx_, std::move(s1));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(ctx_);
    FieldElement base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return ctx_->conductor() == o.ctx_->conductor() && c_ == o.c_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
    if (auto cmp = ctx_->conductor() <=> o.ctx_->conductor(); cmp != 0) return cmp;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int cmp = ::cmp(c_[i], o.c_[i]);
        if (cmp < 0) return std::strong_ordering::less;
        if (cmp > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::optional<unsigned> FieldElement::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    unsigned w = ctx_->max_root_order();
    FieldElement p = *this;
    for (unsigned k = 1; k <= w; ++k) {
        if (p.is_one()) return k;
        p = p * *this;
    }
    return std::nullopt;
}

std::complex<double> FieldElement::embed(unsigned k) const {
    unsigned n = ctx_->conductor();
    if (std::gcd(k, n) != 1)
        throw invalid_embedding_error("embedding index " + std::to_string(k) +
                                      " not coprime to conductor " + std::to_string(n));
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
    std::complex<double> zeta(std::cos(angle), std::sin(angle));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * zeta + c_[i].get_d();
    return acc;
}

std::vector<unsigned> embedding_indices(const FieldContext& ctx) {
    std::vector<unsigned> out;
    for (unsigned k = 1; k <= ctx.conductor(); ++k)
        if (std::gcd(k, ctx.conductor()) == 1) out.push_back(k);
    return out;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (first) {
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        if (i == 0) {
            os << q.get_str();
        } else {
            if (q != 1) os << q.get_str() << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct ElementParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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

    Rational number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number", pos);
        Rational num(std::string(text.substr(start, pos - start)));
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) throw parse_error("expected a denominator", pos);
            Rational den(std::string(text.substr(dstart, pos - dstart)));
            if (den == 0) throw parse_error("zero denominator", dstart);
            num /= den;
        }
        num.canonicalize();
        return num;
    }

    long exponent() {
        skip_ws();
        bool neg = eat('-');
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected an exponent", pos);
        long e = std::stol(std::string(text.substr(start, pos - start)));
        return neg ? -e : e;
    }

    // term := number ['*' gpow] | gpow ; gpow := 'g' ['^' int]
    FieldElement term(const FieldPtr& ctx) {
        skip_ws();
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            if (!eat('*')) {
                skip_ws();
                if (peek() != 'g') return FieldElement::from_rational(ctx, coeff);
            }
        }
        if (peek() == 'g') {
            ++pos;
            long e = 1;
            if (eat('^')) e = exponent();
            return FieldElement::from_rational(ctx, coeff) * FieldElement::zeta_power(ctx, e);
        }
        if (!have_coeff) throw parse_error("expected a coefficient or g", pos);
        return FieldElement::from_rational(ctx, coeff);
    }

    FieldElement parse(const FieldPtr& ctx) {
        FieldElement acc = FieldElement::zero(ctx);
        bool neg = eat('-');
        acc = acc + (neg ? -term(ctx) : term(ctx));
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+')) {
                acc = acc + term(ctx);
            } else if (eat('-')) {
                acc = acc - term(ctx);
            } else {
                throw parse_error("unexpected character", pos);
            }
        }
        return acc;
    }
};

}  // namespace

FieldElement FieldElement::parse(const FieldPtr& ctx, std::string_view text) {
    ElementParser p{text};
    return p.parse(ctx);
}

bool ExtendedValue::operator==(const ExtendedValue& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return *v_ == *o.v_;
}

std::strong_ordering ExtendedValue::operator<=>(const ExtendedValue& o) const {
    if (is_infinity() && o.is_infinity()) return std::strong_ordering::equal;
    if (is_infinity()) return std::strong_ordering::greater;
    if (o.is_infinity()) return std::strong_ordering::less;
    return *v_ <=> *o.v_;
}

std::string ExtendedValue::str() const {
    return is_infinity() ? "inf" : v_->str();
}

}  // namespace chow
