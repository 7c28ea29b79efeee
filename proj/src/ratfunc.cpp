#include "chow/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace chow {

FactoredRational::FactoredRational(FieldPtr ctx, FieldElement unit,
                                   std::map<FieldElement, int> factors)
    : ctx_(std::move(ctx)), unit_(std::move(unit)), factors_(std::move(factors)) {
    if (unit_.is_zero()) throw arithmetic_error("factored rational with zero unit");
    for (auto it = factors_.begin(); it != factors_.end();)
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
}

FactoredRational FactoredRational::constant(FieldElement unit) {
    FieldPtr ctx = unit.context();
    return FactoredRational(ctx, std::move(unit), {});
}

FactoredRational FactoredRational::one(const FieldPtr& ctx) {
    return constant(FieldElement::one(ctx));
}

FactoredRational FactoredRational::x(const FieldPtr& ctx) {
    std::map<FieldElement, int> f;
    f.emplace(FieldElement::zero(ctx), 1);
    return FactoredRational(ctx, FieldElement::one(ctx), std::move(f));
}

FactoredRational FactoredRational::make(FieldElement unit,
                                        std::vector<std::pair<FieldElement, int>> factors) {
    FieldPtr ctx = unit.context();
    std::map<FieldElement, int> f;
    for (auto& [root, exp] : factors) f[root] += exp;
    return FactoredRational(ctx, std::move(unit), std::move(f));
}

FactoredRational FactoredRational::linear_fraction(const FieldElement& a, const FieldElement& b,
                                                   const FieldElement& c, const FieldElement& d) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() && b.is_zero()) throw arithmetic_error("zero numerator in linear fraction");
    if (c.is_zero() && d.is_zero()) throw arithmetic_error("zero denominator in linear fraction");
    std::map<FieldElement, int> f;
    FieldElement unit = FieldElement::one(ctx);
    if (!a.is_zero()) {
        unit = unit * a;
        f[-(b / a)] += 1;
    } else {
        unit = unit * b;
    }
    if (!c.is_zero()) {
        unit = unit / c;
        f[-(d / c)] -= 1;
    } else {
        unit = unit / d;
    }
    return FactoredRational(ctx, std::move(unit), std::move(f));
}

int FactoredRational::numerator_degree() const {
    int d = 0;
    for (const auto& [r, e] : factors_)
        if (e > 0) d += e;
    return d;
}

int FactoredRational::denominator_degree() const {
    int d = 0;
    for (const auto& [r, e] : factors_)
        if (e < 0) d -= e;
    return d;
}

int FactoredRational::total_degree() const {
    int d = 0;
    for (const auto& [r, e] : factors_) d += e;
    return d;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    require_same_context(unit_, o.unit_);
    std::map<FieldElement, int> f = factors_;
    for (const auto& [r, e] : o.factors_) f[r] += e;
    return FactoredRational(ctx_, unit_ * o.unit_, std::move(f));
}

FactoredRational FactoredRational::inverse() const {
    std::map<FieldElement, int> f = factors_;
    for (auto& [r, e] : f) e = -e;
    return FactoredRational(ctx_, unit_.inverse(), std::move(f));
}

FactoredRational FactoredRational::pow(int e) const {
    if (e == 0) return one(ctx_);
    std::map<FieldElement, int> f = factors_;
    for (auto& [r, ex] : f) ex *= e;
    return FactoredRational(ctx_, unit_.pow(e), std::move(f));
}

FactoredRational FactoredRational::scale(const FieldElement& c) const {
    if (c.is_zero()) throw arithmetic_error("scaling a function to zero");
    return FactoredRational(ctx_, unit_ * c, factors_);
}

ExtendedValue FactoredRational::eval(const ExtendedValue& x0) const {
    if (x0.is_infinity()) {
        int d = total_degree();
        if (d > 0) return ExtendedValue::infinity();
        if (d < 0) return FieldElement::zero(ctx_);
        return unit_;  // all factors are monic
    }
    int local = 0;
    FieldElement acc = unit_;
    for (const auto& [r, e] : factors_) {
        if (r == x0.value()) {
            local += e;
        } else {
            acc = acc * (x0.value() - r).pow(e);
        }
    }
    if (local > 0) return FieldElement::zero(ctx_);
    if (local < 0) return ExtendedValue::infinity();
    return acc;
}

std::vector<std::pair<ExtendedValue, int>> FactoredRational::divisor() const {
    std::vector<std::pair<ExtendedValue, int>> out;
    for (const auto& [r, e] : factors_) out.emplace_back(ExtendedValue(r), e);
    int d = total_degree();
    if (d != 0) out.emplace_back(ExtendedValue::infinity(), -d);
    return out;
}

int FactoredRational::pole_order(const ExtendedValue& x0) const {
    if (x0.is_infinity()) return std::max(0, total_degree());
    auto it = factors_.find(x0.value());
    if (it == factors_.end()) return 0;
    return std::max(0, -it->second);
}

FactoredRational FactoredRational::reparam(const Mobius& m) const {
    // f(m(x)) with m = (a x + b)/(c x + d).
    const FieldElement &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    FieldElement unit = unit_;
    std::map<FieldElement, int> f;
    int total = 0;
    for (const auto& [r, e] : factors_) {
        total += e;
        // m(x) - r = ((a - r c) x + (b - r d)) / (c x + d)
        FieldElement na = a - r * c;
        FieldElement nb = b - r * d;
        if (!na.is_zero()) {
            unit = unit * na.pow(e);
            f[-(nb / na)] += e;
        } else {
            unit = unit * nb.pow(e);
        }
    }
    // Pool of (c x + d)^{-total}.
    if (!c.is_zero()) {
        unit = unit * c.pow(-total);
        f[-(d / c)] -= total;
    } else {
        unit = unit * d.pow(-total);
    }
    return FactoredRational(ctx_, std::move(unit), std::move(f));
}

std::optional<Mobius> FactoredRational::to_mobius() const {
    if (is_constant()) return std::nullopt;
    if (numerator_degree() > 1 || denominator_degree() > 1) return std::nullopt;
    FieldElement zero = FieldElement::zero(ctx_);
    FieldElement one = FieldElement::one(ctx_);
    // u, u (x - r), u / (x - s), u (x - r)/(x - s)
    std::optional<FieldElement> r, s;
    for (const auto& [root, e] : factors_) (e > 0 ? r : s) = root;
    FieldElement a = r ? unit_ : zero;
    FieldElement b = r ? -(unit_ * *r) : unit_;
    FieldElement c = s ? one : zero;
    FieldElement d = s ? -*s : one;
    return Mobius(a, b, c, d);
}

bool FactoredRational::operator==(const FactoredRational& o) const {
    return unit_ == o.unit_ && factors_ == o.factors_;
}

std::strong_ordering FactoredRational::operator<=>(const FactoredRational& o) const {
    if (auto c = unit_ <=> o.unit_; c != 0) return c;
    if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
    for (auto it = factors_.begin(), jt = o.factors_.begin(); it != factors_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (auto c = it->second <=> jt->second; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string FactoredRational::str() const {
    std::ostringstream os;
    bool unit_is_simple = unit_.is_rational();
    if (!unit_.is_one() || factors_.empty()) {
        if (unit_is_simple)
            os << unit_.str();
        else
            os << "(" << unit_.str() << ")";
    }
    bool first = os.str().empty();
    for (const auto& [r, e] : factors_) {
        if (!first) os << " * ";
        first = false;
        if (r.is_zero())
            os << "x";
        else if (r.is_rational() && *r.as_rational() > 0)
            os << "(x - " << r.str() << ")";
        else if (r.is_rational())
            os << "(x + " << (-r).str() << ")";
        else
            os << "(x - (" << r.str() << "))";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Mobius::Mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if ((a_ * d_ - b_ * c_).is_zero()) throw arithmetic_error("degenerate mobius map");
    // Normalize: first nonzero of a, b, c, d becomes 1.
    FieldElement scale = !a_.is_zero() ? a_ : (!b_.is_zero() ? b_ : (!c_.is_zero() ? c_ : d_));
    FieldElement inv = scale.inverse();
    a_ = a_ * inv;
    b_ = b_ * inv;
    c_ = c_ * inv;
    d_ = d_ * inv;
}

Mobius Mobius::identity(const FieldPtr& ctx) {
    return Mobius(FieldElement::one(ctx), FieldElement::zero(ctx), FieldElement::zero(ctx),
                  FieldElement::one(ctx));
}

Mobius Mobius::sending_to_standard(const ExtendedValue& p, const ExtendedValue& q,
                                   const ExtendedValue& r) {
    if (p == q || q == r || p == r)
        throw invalid_argument_error("mobius target points must be distinct");
    FieldPtr ctx;
    for (const auto* v : {&p, &q, &r})
        if (!v->is_infinity()) ctx = v->value().context();
    if (!ctx) throw invalid_argument_error("cannot infer field context");
    FieldElement one = FieldElement::one(ctx), zero = FieldElement::zero(ctx);
    if (p.is_infinity()) {
        // (q - r) / (x - r)
        return Mobius(zero, q.value() - r.value(), one, -r.value());
    }
    if (q.is_infinity()) {
        // (x - p) / (x - r)
        return Mobius(one, -p.value(), one, -r.value());
    }
    if (r.is_infinity()) {
        // (x - p) / (q - p)
        return Mobius(one, -p.value(), zero, q.value() - p.value());
    }
    // ((x - p)(q - r)) / ((x - r)(q - p))
    FieldElement qr = q.value() - r.value();
    FieldElement qp = q.value() - p.value();
    return Mobius(qr, -(p.value() * qr), qp, -(r.value() * qp));
}

const FieldPtr& Mobius::context() const {
    return a_.context();
}

bool Mobius::is_identity() const {
    return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

ExtendedValue Mobius::apply(const ExtendedValue& v) const {
    if (v.is_infinity()) {
        if (c_.is_zero()) return ExtendedValue::infinity();
        return a_ / c_;
    }
    FieldElement num = a_ * v.value() + b_;
    FieldElement den = c_ * v.value() + d_;
    if (den.is_zero()) return ExtendedValue::infinity();
    return num / den;
}

ExtendedValue Mobius::preimage_of_zero() const {
    if (a_.is_zero()) return ExtendedValue::infinity();
    return -(b_ / a_);
}

ExtendedValue Mobius::preimage_of_infinity() const {
    if (c_.is_zero()) return ExtendedValue::infinity();
    return -(d_ / c_);
}

Mobius Mobius::inverse() const {
    return Mobius(d_, -b_, -c_, a_);
}

Mobius Mobius::compose(const Mobius& inner) const {
    return Mobius(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                  c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

FactoredRational Mobius::to_factored() const {
    return FactoredRational::linear_fraction(a_, b_, c_, d_);
}

bool Mobius::operator==(const Mobius& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::strong_ordering Mobius::operator<=>(const Mobius& o) const {
    if (auto c = a_ <=> o.a_; c != 0) return c;
    if (auto c = b_ <=> o.b_; c != 0) return c;
    if (auto c = c_ <=> o.c_; c != 0) return c;
    return d_ <=> o.d_;
}

std::string Mobius::str() const {
    std::ostringstream os;
    os << "(" << a_.str() << ")*z + (" << b_.str() << ") / (" << c_.str() << ")*z + (" << d_.str()
       << ")";
    return os.str();
}

bool restriction_is_one(const Restriction& r) {
    if (const auto* f = std::get_if<FactoredRational>(&r)) return f->is_one();
    return false;
}

SurfaceCoordinate::SurfaceCoordinate(FieldPtr ctx, std::variant<PureX, PureZ, Mixed> v)
    : ctx_(std::move(ctx)), v_(std::move(v)) {}

SurfaceCoordinate SurfaceCoordinate::pure_x(FactoredRational f) {
    FieldPtr ctx = f.context();
    return SurfaceCoordinate(ctx, PureX{std::move(f)});
}

SurfaceCoordinate SurfaceCoordinate::pure_z(Mobius m) {
    FieldPtr ctx = m.context();
    return SurfaceCoordinate(ctx, PureZ{std::move(m)});
}

SurfaceCoordinate SurfaceCoordinate::mixed(FactoredRational p, std::optional<FactoredRational> q) {
    FieldPtr ctx = p.context();
    if (p.is_constant() && q && q->is_constant()) {
        // (z - p)/(z - q) is an invertible function of z alone.
        FieldElement one = FieldElement::one(ctx);
        if (p.unit() == q->unit()) throw arithmetic_error("mixed coordinate identically one");
        return pure_z(Mobius(one, -p.unit(), one, -q->unit()));
    }
    if (q && p == *q) throw arithmetic_error("mixed coordinate identically one");
    return SurfaceCoordinate(ctx, Mixed{std::move(p), std::move(q)});
}

bool SurfaceCoordinate::is_pure_x() const {
    return std::holds_alternative<PureX>(v_);
}
bool SurfaceCoordinate::is_pure_z() const {
    return std::holds_alternative<PureZ>(v_);
}
bool SurfaceCoordinate::is_mixed() const {
    return std::holds_alternative<Mixed>(v_);
}
const SurfaceCoordinate::PureX& SurfaceCoordinate::as_pure_x() const {
    return std::get<PureX>(v_);
}
const SurfaceCoordinate::PureZ& SurfaceCoordinate::as_pure_z() const {
    return std::get<PureZ>(v_);
}
const SurfaceCoordinate::Mixed& SurfaceCoordinate::as_mixed() const {
    return std::get<Mixed>(v_);
}

std::vector<std::pair<SurfaceCoordinate::DivComponent, int>> SurfaceCoordinate::divisor() const {
    using DC = DivComponent;
    std::vector<std::pair<DC, int>> out;
    if (is_pure_x()) {
        for (const auto& [pt, e] : as_pure_x().f.divisor())
            out.push_back({DC{DC::Kind::Vertical, pt, std::nullopt}, e});
        return out;
    }
    if (is_pure_z()) {
        const Mobius& m = as_pure_z().m;
        out.push_back({DC{DC::Kind::Horizontal, m.preimage_of_zero(), std::nullopt}, 1});
        out.push_back({DC{DC::Kind::Horizontal, m.preimage_of_infinity(), std::nullopt}, -1});
        return out;
    }
    const Mixed& mx = as_mixed();
    // Graph or horizontal component from the numerator z - P(x).
    if (mx.p.is_constant())
        out.push_back({DC{DC::Kind::Horizontal, ExtendedValue(mx.p.unit()), std::nullopt}, 1});
    else
        out.push_back({DC{DC::Kind::Graph, ExtendedValue::infinity(), mx.p}, 1});
    if (mx.q) {
        if (mx.q->is_constant())
            out.push_back({DC{DC::Kind::Horizontal, ExtendedValue(mx.q->unit()), std::nullopt}, -1});
        else
            out.push_back({DC{DC::Kind::Graph, ExtendedValue::infinity(), *mx.q}, -1});
    } else {
        out.push_back({DC{DC::Kind::Horizontal, ExtendedValue::infinity(), std::nullopt}, -1});
    }
    // Vertical fibers over the poles of P and Q.
    std::vector<ExtendedValue> places;
    for (const auto& [pt, e] : mx.p.divisor()) places.push_back(pt);
    if (mx.q)
        for (const auto& [pt, e] : mx.q->divisor()) places.push_back(pt);
    places.emplace_back(ExtendedValue::infinity());
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    for (const auto& x0 : places) {
        int m = (mx.q ? mx.q->pole_order(x0) : 0) - mx.p.pole_order(x0);
        if (m != 0) out.push_back({DC{DC::Kind::Vertical, x0, std::nullopt}, m});
    }
    return out;
}

namespace {

Restriction constant_restriction(const ExtendedValue& v) {
    if (v.is_infinity() || v.value().is_zero()) return Restriction(v);
    return Restriction(FactoredRational::constant(v.value()));
}

// z0 - f as a factored rational of x, for fractional-linear or constant f.
FactoredRational subtract_from_constant(const FieldElement& z0, const FactoredRational& f) {
    if (f.is_constant()) {
        FieldElement v = z0 - f.unit();
        if (v.is_zero()) throw unsupported_shape_error("restriction is identically zero");
        return FactoredRational::constant(v);
    }
    auto m = f.to_mobius();
    if (!m) throw unsupported_shape_error("restriction of a nonlinear coordinate");
    // z0 - (a x + b)/(c x + d) = ((z0 c - a) x + (z0 d - b)) / (c x + d)
    FieldElement na = z0 * m->c() - m->a();
    FieldElement nb = z0 * m->d() - m->b();
    if (na.is_zero() && nb.is_zero())
        throw unsupported_shape_error("restriction is identically zero");
    return FactoredRational::linear_fraction(na, nb, m->c(), m->d());
}

}  // namespace

Restriction SurfaceCoordinate::restrict_to_vertical(const ExtendedValue& x0) const {
    if (is_pure_x()) return constant_restriction(as_pure_x().f.eval(x0));
    if (is_pure_z()) return Restriction(as_pure_z().m.to_factored());
    const Mixed& mx = as_mixed();
    ExtendedValue p = mx.p.eval(x0);
    ExtendedValue q = mx.q ? mx.q->eval(x0) : ExtendedValue::infinity();
    if (!p.is_infinity() && !q.is_infinity()) {
        if (p == q) return Restriction(FactoredRational::one(ctx_));
        return Restriction(FactoredRational::make(
            FieldElement::one(ctx_), {{p.value(), 1}, {q.value(), -1}}));
    }
    if (p.is_infinity() && !q.is_infinity()) return Restriction(ExtendedValue::infinity());
    if (!p.is_infinity() && q.is_infinity()) {
        if (!mx.q) {
            // z - P(x) restricted to a fiber where P is finite: z - p.
            return Restriction(FactoredRational::make(FieldElement::one(ctx_), {{p.value(), 1}}));
        }
        return Restriction(ExtendedValue(FieldElement::zero(ctx_)));
    }
    // Both blow up; the limit is P/Q there.
    if (!mx.q) return Restriction(ExtendedValue::infinity());
    ExtendedValue l = (mx.p * mx.q->inverse()).eval(x0);
    if (!l.is_infinity() && l.value().is_one())
        throw unsupported_shape_error("tangential fiber restriction");
    return constant_restriction(l);
}

Restriction SurfaceCoordinate::restrict_to_horizontal(const ExtendedValue& z0) const {
    if (is_pure_x()) return Restriction(as_pure_x().f);
    if (is_pure_z()) return constant_restriction(as_pure_z().m.apply(z0));
    const Mixed& mx = as_mixed();
    if (z0.is_infinity()) return Restriction(FactoredRational::one(ctx_));
    if (z0.value().is_zero()) {
        // (-P) / (-Q) = P/Q, or -P when the denominator is absent.
        if (!mx.q) return Restriction(mx.p.scale(-FieldElement::one(ctx_)));
        return Restriction(mx.p * mx.q->inverse());
    }
    FactoredRational num = subtract_from_constant(z0.value(), mx.p);
    if (!mx.q) return Restriction(num);
    FactoredRational den = subtract_from_constant(z0.value(), *mx.q);
    return Restriction(num * den.inverse());
}

Restriction SurfaceCoordinate::restrict_to_graph(const FactoredRational& p) const {
    if (is_pure_x()) return Restriction(as_pure_x().f);
    if (is_pure_z()) {
        const Mobius& m = as_pure_z().m;
        if (m.is_identity()) return Restriction(p);
        if (p.is_constant()) return constant_restriction(m.apply(ExtendedValue(p.unit())));
        auto pm = p.to_mobius();
        if (!pm) throw unsupported_shape_error("z-coordinate composed with a nonlinear graph");
        return Restriction(m.compose(*pm).to_factored());
    }
    throw unsupported_shape_error("two interacting mixed coordinates");
}

Restriction SurfaceCoordinate::restrict_to(const DivComponent& comp) const {
    switch (comp.kind) {
        case DivComponent::Kind::Vertical:
            return restrict_to_vertical(comp.at);
        case DivComponent::Kind::Horizontal:
            return restrict_to_horizontal(comp.at);
        case DivComponent::Kind::Graph:
            return restrict_to_graph(*comp.graph);
    }
    throw error("unreachable");
}

bool SurfaceCoordinate::operator==(const SurfaceCoordinate& o) const {
    return (*this <=> o) == 0;
}

std::strong_ordering SurfaceCoordinate::operator<=>(const SurfaceCoordinate& o) const {
    if (auto c = v_.index() <=> o.v_.index(); c != 0) return c;
    if (is_pure_x()) return as_pure_x().f <=> o.as_pure_x().f;
    if (is_pure_z()) return as_pure_z().m <=> o.as_pure_z().m;
    const Mixed &a = as_mixed(), &b = o.as_mixed();
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (a.q.has_value() != b.q.has_value())
        return a.q.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a.q) return std::strong_ordering::equal;
    return *a.q <=> *b.q;
}

std::string SurfaceCoordinate::str() const {
    std::ostringstream os;
    if (is_pure_x()) {
        os << as_pure_x().f.str();
    } else if (is_pure_z()) {
        const Mobius& m = as_pure_z().m;
        if (m.is_identity())
            os << "z";
        else
            os << "[" << m.str() << "]";
    } else {
        const Mixed& mx = as_mixed();
        os << "(z - (" << mx.p.str() << "))";
        if (mx.q) os << "/(z - (" << mx.q->str() << "))";
    }
    return os.str();
}

}  // namespace chow
