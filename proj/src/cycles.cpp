#include "chow/cycles.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>

#include "chow/errors.hpp"

namespace chow {

namespace {

bool is_zero_or_inf(const ExtendedValue& v) {
    return v.is_infinity() || v.value().is_zero();
}

bool is_one_value(const ExtendedValue& v) {
    return !v.is_infinity() && v.value().is_one();
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

std::string term_class_name(TermClass c) {
    switch (c) {
        case TermClass::Zero: return "zero";
        case TermClass::Degenerate: return "degenerate";
        case TermClass::ZPrime: return "constant-first";
        case TermClass::Generic: return "generic";
    }
    return "?";
}

CurveTerm::CurveTerm(FactoredRational f1, FactoredRational f2, FactoredRational f3)
    : coords_{std::move(f1), std::move(f2), std::move(f3)} {
    if (!coords_[0].context()->same(*coords_[1].context()) ||
        !coords_[0].context()->same(*coords_[2].context()))
        throw context_mismatch_error("curve coordinates over different fields");
}

TermClass CurveTerm::classify() const {
    for (const auto& f : coords_)
        if (f.is_one()) return TermClass::Zero;
    int n_const = 0;
    for (const auto& f : coords_)
        if (f.is_constant()) ++n_const;
    if (n_const >= 2) return TermClass::Degenerate;
    if (coords_[0].is_constant()) return TermClass::ZPrime;
    return TermClass::Generic;
}

std::string CurveTerm::str() const {
    return "[" + coords_[0].str() + ", " + coords_[1].str() + ", " + coords_[2].str() + "]";
}

PointTerm::PointTerm(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
    require_same_context(a_, b_);
    if (a_.is_zero() || b_.is_zero())
        throw invalid_argument_error("point coordinates must be nonzero");
}

bool PointTerm::is_degenerate() const { return a_.is_one() || b_.is_one(); }

std::strong_ordering PointTerm::operator<=>(const PointTerm& o) const {
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
}

std::string PointTerm::str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }

SurfaceTerm::SurfaceTerm(SurfaceCoordinate c1, SurfaceCoordinate c2, SurfaceCoordinate c3,
                         SurfaceCoordinate c4)
    : coords_{std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {
    for (int i = 1; i < 4; ++i)
        if (!coords_[0].context()->same(*coords_[i].context()))
            throw context_mismatch_error("surface coordinates over different fields");
    int n_mixed = 0;
    for (const auto& c : coords_)
        if (c.is_mixed()) ++n_mixed;
    if (n_mixed > 1)
        throw unsupported_shape_error("more than one coordinate mixes both parameters");
}

std::string SurfaceTerm::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += coords_[i].str();
    }
    return s + "]";
}

AdmissibilityReport admissible_curve(const CurveTerm& t) {
    std::set<ExtendedValue> support;
    for (const auto& f : t.coords())
        for (const auto& [x0, e] : f.divisor()) support.insert(x0);
    for (const auto& x0 : support) {
        std::array<ExtendedValue, 3> vals{t.coord(0).eval(x0), t.coord(1).eval(x0),
                                          t.coord(2).eval(x0)};
        int hits = 0;
        bool excused = false;
        for (const auto& v : vals) {
            if (is_zero_or_inf(v)) ++hits;
            if (is_one_value(v)) excused = true;
        }
        if (hits >= 2 && !excused) {
            std::ostringstream w;
            w << "at x = " << x0.str() << " the curve " << t.str() << " meets the point ("
              << vals[0].str() << ", " << vals[1].str() << ", " << vals[2].str()
              << ") on a codimension-" << hits << " face";
            return {false, w.str()};
        }
    }
    return {true, ""};
}

PointSum boundary_curve(const CurveTerm& t) {
    PointSum out;
    for (int i = 0; i < 3; ++i) {
        long long sign = (i % 2 == 0) ? 1 : -1;
        int j = (i == 0) ? 1 : 0;
        int k = (i == 2) ? 1 : 2;
        for (const auto& [x0, e] : t.coord(i).divisor()) {
            ExtendedValue vj = t.coord(j).eval(x0);
            ExtendedValue vk = t.coord(k).eval(x0);
            if (is_one_value(vj) || is_one_value(vk)) continue;
            if (is_zero_or_inf(vj) || is_zero_or_inf(vk))
                throw inadmissible_error("boundary of " + t.str() + " at x = " + x0.str() +
                                         " hits (" + vj.str() + ", " + vk.str() + ")");
            out.add(PointTerm(vj.value(), vk.value()), sign * e);
        }
    }
    return out;
}

CurveSum boundary_surface(const SurfaceTerm& t) {
    CurveSum out;
    for (int i = 0; i < 4; ++i) {
        long long sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [comp, m] : t.coord(i).divisor()) {
            std::array<std::optional<Restriction>, 3> rs;
            std::exception_ptr deferred;
            int k = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                try {
                    rs[k] = t.coord(j).restrict_to(comp);
                } catch (const error&) {
                    deferred = std::current_exception();
                }
                ++k;
            }
            bool has_one = false;
            bool has_extreme = false;
            for (const auto& r : rs) {
                if (!r) continue;
                if (restriction_is_one(*r)) has_one = true;
                if (std::holds_alternative<ExtendedValue>(*r)) has_extreme = true;
            }
            if (has_one) continue;
            if (deferred) std::rethrow_exception(deferred);
            if (has_extreme) {
                std::string comp_desc = (comp.kind == SurfaceCoordinate::DivComponent::Kind::Graph)
                                            ? ("z = " + comp.graph->str())
                                            : ((comp.kind ==
                                                SurfaceCoordinate::DivComponent::Kind::Vertical)
                                                   ? ("x = " + comp.at.str())
                                                   : ("z = " + comp.at.str()));
                throw inadmissible_error("face " + comp_desc + " of " + t.str() +
                                         " restricts a coordinate to 0 or infinity");
            }
            out.add(CurveTerm(std::get<FactoredRational>(*rs[0]),
                              std::get<FactoredRational>(*rs[1]),
                              std::get<FactoredRational>(*rs[2])),
                    sign * m);
        }
    }
    return out;
}

CurveSum boundary_surface_sum(const SurfaceSum& s) {
    CurveSum out;
    for (const auto& [t, c] : s.terms()) out.add(boundary_surface(t), c);
    return out;
}

std::optional<CurveTerm> descend_once(const CurveTerm& t, unsigned long n) {
    const auto& ctx = t.context();
    if (n < 2) return std::nullopt;
    if (ctx->max_root_order() % n != 0) return std::nullopt;
    bool all_const = true;
    for (const auto& f : t.coords())
        if (!f.is_constant()) all_const = false;
    if (all_const) return std::nullopt;

    FieldElement omega = FieldElement::root_of_unity(ctx, static_cast<unsigned>(n));
    Mobius scale(omega, FieldElement::zero(ctx), FieldElement::zero(ctx),
                 FieldElement::one(ctx));
    for (const auto& f : t.coords())
        if (!(f.reparam(scale) == f)) return std::nullopt;

    std::array<std::optional<FactoredRational>, 3> reduced;
    for (int i = 0; i < 3; ++i) {
        const auto& f = t.coord(i);
        std::map<FieldElement, int> remaining = f.factors();
        std::vector<std::pair<FieldElement, int>> grouped;
        while (!remaining.empty()) {
            auto [r, e] = *remaining.begin();
            remaining.erase(remaining.begin());
            if (r.is_zero()) {
                if (e % static_cast<int>(n) != 0) return std::nullopt;
                grouped.emplace_back(r, e / static_cast<int>(n));
                continue;
            }
            FieldElement rr = r;
            for (unsigned long j = 1; j < n; ++j) {
                rr = rr * omega;
                auto it = remaining.find(rr);
                if (it == remaining.end() || it->second != e) return std::nullopt;
                remaining.erase(it);
            }
            grouped.emplace_back(r.pow(static_cast<long>(n)), e);
        }
        reduced[i] = FactoredRational::make(f.unit(), std::move(grouped));
    }
    return CurveTerm(*reduced[0], *reduced[1], *reduced[2]);
}

DescendResult descend_maximal(const CurveTerm& t) {
    DescendResult res{t, 1};
    auto primes = prime_divisors(t.context()->max_root_order());
    bool progress = true;
    while (progress) {
        progress = false;
        for (unsigned p : primes) {
            if (auto d = descend_once(res.term, p)) {
                res.term = *d;
                res.multiplier *= p;
                progress = true;
                break;
            }
        }
    }
    return res;
}

CurveTerm reparam_curve(const CurveTerm& t, const Mobius& m) {
    return CurveTerm(t.coord(0).reparam(m), t.coord(1).reparam(m), t.coord(2).reparam(m));
}

CanonicalForm canonical_form(const CurveTerm& t) {
    static std::map<CurveTerm, CanonicalForm> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(t);
        if (it != cache.end()) return it->second;
    }

    DescendResult d = descend_maximal(t);
    std::set<ExtendedValue> support;
    for (const auto& f : d.term.coords())
        for (const auto& [x0, e] : f.divisor()) support.insert(x0);

    CanonicalForm result{d.term, d.multiplier};
    if (support.size() >= 3) {
        std::vector<ExtendedValue> pts(support.begin(), support.end());
        std::optional<CurveTerm> best;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                for (std::size_t c = 0; c < pts.size(); ++c) {
                    if (a == b || a == c || b == c) continue;
                    Mobius m = Mobius::sending_to_standard(pts[a], pts[b], pts[c]);
                    CurveTerm cand = reparam_curve(d.term, m.inverse());
                    if (!best || cand < *best) best = cand;
                }
        result.term = *best;
    }

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(t, result);
    return result;
}

void add_canonical(CurveSum& sum, const CurveTerm& t, long long c) {
    if (c == 0) return;
    if (t.classify() == TermClass::Generic) {
        CanonicalForm cf = canonical_form(t);
        sum.add(cf.term, c * cf.multiplier);
    } else {
        sum.add(t, c);
    }
}

CurveSum canonicalize_sum(const CurveSum& s) {
    CurveSum out;
    for (const auto& [t, c] : s.terms()) add_canonical(out, t, c);
    return out;
}

NormalizedSum normalize_quotient(const CurveSum& s) {
    NormalizedSum out;
    for (const auto& [t, c] : s.terms()) {
        TermClass cls = t.classify();
        if (cls == TermClass::Generic) {
            add_canonical(out.kept, t, c);
        } else {
            out.discarded.push_back({t, c, cls});
        }
    }
    return out;
}

ClosednessReport closedness_check(const PointSum& s) {
    std::map<FieldElement, FieldElement> products;
    for (const auto& [p, m] : s.terms()) {
        FieldElement contrib = p.second().pow(m);
        auto [it, inserted] = products.try_emplace(p.first(), contrib);
        if (!inserted) it->second = it->second * contrib;
    }
    for (const auto& [a, prod] : products) {
        if (!prod.is_one()) {
            return {false, "first coordinate " + a.str() +
                               ": product of second coordinates is " + prod.str() + ", not 1"};
        }
    }
    return {true, ""};
}

CurveTerm totaro_curve(const FieldElement& a) {
    if (a.is_zero()) throw invalid_argument_error("parameter of the basic curve must be nonzero");
    const auto& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    FieldElement zero = FieldElement::zero(ctx);
    FactoredRational f1 = FactoredRational::make(one, {{a, 1}, {zero, -1}});
    FactoredRational f2 = FactoredRational::make(-one, {{one, 1}});
    FactoredRational f3 = FactoredRational::x(ctx);
    return CurveTerm(f1, f2, f3);
}

CurveTerm z_curve(const FieldElement& a, const FieldElement& c) {
    if (a.is_zero() || c.is_zero())
        throw invalid_argument_error("both parameters of a Z-curve must be nonzero");
    const auto& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    FactoredRational f1 = FactoredRational::make(one, {{a, 1}, {one, -1}});
    FactoredRational f2 = FactoredRational::constant(c);
    FactoredRational f3 = FactoredRational::x(ctx);
    return CurveTerm(f1, f2, f3);
}

namespace {
template <class T>
std::string render_sum(const FormalSum<T>& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : s.terms()) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << "*";
        os << t.str();
    }
    return os.str();
}
}  // namespace

std::string sum_str(const CurveSum& s) { return render_sum(s); }
std::string sum_str(const PointSum& s) { return render_sum(s); }
std::string sum_str(const SurfaceSum& s) { return render_sum(s); }

}  // namespace chow
