#include "chow/relations.hpp"

#include <utility>

#include "chow/errors.hpp"

namespace chow {

namespace {

CurveSum compose_claim(const SurfaceSum& chains, const std::vector<Identity::Part>& parts,
                       std::vector<DiscardedTerm>* discarded_out) {
    NormalizedSum ns = normalize_quotient(boundary_surface_sum(chains));
    if (discarded_out) *discarded_out = std::move(ns.discarded);
    CurveSum claim = std::move(ns.kept);
    for (const auto& [part, w] : parts) claim.add(part->claim(), w);
    return claim;
}

}  // namespace

IdentityPtr Identity::make(std::string name, std::string params, FieldPtr ctx,
                           SurfaceSum chains, std::vector<Part> parts) {
    auto id = std::shared_ptr<Identity>(new Identity());
    id->name_ = std::move(name);
    id->params_ = std::move(params);
    id->ctx_ = std::move(ctx);
    id->chains_ = std::move(chains);
    id->parts_ = std::move(parts);
    for (const auto& [part, w] : id->parts_) {
        if (!id->ctx_->same(*part->context()))
            throw context_mismatch_error("identity " + id->name_ + " mixes base fields");
    }
    id->claim_ = compose_claim(id->chains_, id->parts_, &id->discarded_);
    return id;
}

IdentityPtr Identity::with_claim(std::string name, std::string params, FieldPtr ctx,
                                 SurfaceSum chains, std::vector<Part> parts, CurveSum claim) {
    auto id = std::shared_ptr<Identity>(new Identity());
    id->name_ = std::move(name);
    id->params_ = std::move(params);
    id->ctx_ = std::move(ctx);
    id->chains_ = std::move(chains);
    id->parts_ = std::move(parts);
    id->claim_ = std::move(claim);
    return id;
}

std::string Identity::describe() const {
    return params_.empty() ? name_ : name_ + "(" + params_ + ")";
}

void Identity::verify() const {
    if (verified_) return;
    for (const auto& [part, w] : parts_) part->verify();
    CurveSum raw = boundary_surface_sum(chains_);
    PointSum dd;
    for (const auto& [t, c] : raw.terms()) dd.add(boundary_curve(t), c);
    if (!dd.is_zero())
        throw verification_error(describe() + ": boundary of the bounding chains is not closed: " +
                                 sum_str(dd));
    CurveSum recomputed = compose_claim(chains_, parts_, nullptr);
    if (!(recomputed == claim_)) {
        CurveSum diff = recomputed - claim_;
        throw verification_error(describe() + ": stored claim disagrees with the replayed " +
                                 "derivation; difference = " + sum_str(diff));
    }
    verified_ = true;
}

CurveTerm canonical_term(const CurveTerm& t) {
    if (t.classify() != TermClass::Generic) return t;
    return canonical_form(t).term;
}

void Rewriter::apply(const IdentityPtr& id, long long w) {
    if (w == 0) return;
    if (!ctx_->same(*id->context()))
        throw context_mismatch_error("rewriter and identity live over different fields");
    cur_.add(id->claim(), w);
    parts_.emplace_back(id, w);
}

long long Rewriter::coeff_of(const CurveTerm& target) const {
    return cur_.coeff(canonical_term(target));
}

void Rewriter::eliminate(const IdentityPtr& id, const CurveTerm& target) {
    CurveTerm ct = canonical_term(target);
    long long c = cur_.coeff(ct);
    long long d = id->claim().coeff(ct);
    if (c == 0)
        throw invalid_argument_error("eliminate: running sum has no term " + ct.str());
    if (d == 0)
        throw invalid_argument_error("eliminate: " + id->describe() + " has no term " + ct.str());
    if (c % d != 0)
        throw invalid_argument_error("eliminate: coefficient " + std::to_string(c) +
                                     " of " + ct.str() + " is not divisible by " +
                                     std::to_string(d));
    apply(id, -c / d);
}

IdentityPtr Rewriter::finish(std::string name, std::string params) {
    return Identity::make(std::move(name), std::move(params), ctx_, SurfaceSum{},
                          std::move(parts_));
}

namespace rel {

namespace {

using SC = SurfaceCoordinate;

FactoredRational cf(const FieldElement& c) { return FactoredRational::constant(c); }

// (x - a)/(x - b); degenerates to the constant 1 when a == b.
FactoredRational frac(const FieldElement& a, const FieldElement& b) {
    return FactoredRational::make(FieldElement::one(a.context()), {{a, 1}, {b, -1}});
}

FactoredRational xvar(const FieldPtr& ctx) { return FactoredRational::x(ctx); }

SC zcoord(const FieldPtr& ctx) { return SC::pure_z(Mobius::identity(ctx)); }

IdentityPtr single_chain(std::string name, std::string params, const FieldPtr& ctx,
                         SurfaceTerm t, long long c) {
    SurfaceSum s;
    s.add(t, c);
    return Identity::make(std::move(name), std::move(params), ctx, std::move(s), {});
}

std::string slot_name(Slot s) {
    switch (s) {
        case Slot::Left: return "left";
        case Slot::Middle: return "middle";
        case Slot::Right: return "right";
    }
    return "?";
}

}  // namespace

IdentityPtr product_rule(Slot slot, const FactoredRational& h1, const FactoredRational& h2,
                         const FactoredRational& f, const FactoredRational& g) {
    const FieldPtr& ctx = f.context();
    if (h2.is_one())
        throw invalid_argument_error("product rule needs a nontrivial second factor");
    SC mixed = SC::mixed(h1 * h2, h1);
    SC fx = SC::pure_x(f);
    SC gx = SC::pure_x(g);
    SC z = zcoord(ctx);
    std::string params = slot_name(slot) + "; h1 = " + h1.str() + "; h2 = " + h2.str() +
                         "; f = " + f.str() + "; g = " + g.str();
    switch (slot) {
        case Slot::Left:
            return single_chain("product_rule", params, ctx, SurfaceTerm(mixed, z, fx, gx), 1);
        case Slot::Middle:
            return single_chain("product_rule", params, ctx, SurfaceTerm(fx, mixed, z, gx), 1);
        case Slot::Right:
            return single_chain("product_rule", params, ctx, SurfaceTerm(fx, gx, mixed, z), 1);
    }
    throw invalid_argument_error("bad slot");
}

IdentityPtr swap23(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h) {
    const FieldPtr& ctx = f.context();
    if (g.is_one()) throw invalid_argument_error("swap23: middle coordinate is 1");
    SC mid = SC::mixed(g, FactoredRational::one(ctx));
    return single_chain("swap23", "f = " + f.str() + "; g = " + g.str() + "; h = " + h.str(),
                        ctx, SurfaceTerm(SC::pure_x(f), mid, SC::pure_x(h), zcoord(ctx)), 1);
}

IdentityPtr swap12(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h) {
    const FieldPtr& ctx = f.context();
    if (f.is_one()) throw invalid_argument_error("swap12: first coordinate is 1");
    SC first = SC::mixed(f, FactoredRational::one(ctx));
    return single_chain("swap12", "f = " + f.str() + "; g = " + g.str() + "; h = " + h.str(),
                        ctx, SurfaceTerm(first, SC::pure_x(g), zcoord(ctx), SC::pure_x(h)), 1);
}

IdentityPtr swap13(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h) {
    const FieldPtr& ctx = f.context();
    if (f.is_one() || g.is_one()) throw invalid_argument_error("swap13: coordinate is 1");
    SurfaceSum s;
    s.add(SurfaceTerm(SC::mixed(f, FactoredRational::one(ctx)), SC::pure_x(g), SC::pure_x(h),
                      zcoord(ctx)),
          1);
    s.add(SurfaceTerm(SC::mixed(g, FactoredRational::one(ctx)), SC::pure_x(h), zcoord(ctx),
                      SC::pure_x(f)),
          1);
    return Identity::make("swap13",
                          "f = " + f.str() + "; g = " + g.str() + "; h = " + h.str(), ctx,
                          std::move(s), {});
}

IdentityPtr reciprocal(const FactoredRational& f, const FactoredRational& u,
                       const FactoredRational& v) {
    const FieldPtr& ctx = f.context();
    if (f.is_one()) throw invalid_argument_error("reciprocal: trivial function");
    SC first = SC::mixed(FactoredRational::one(ctx), f);
    return single_chain("reciprocal", "f = " + f.str() + "; u = " + u.str() + "; v = " + v.str(),
                        ctx,
                        SurfaceTerm(first, zcoord(ctx), SC::pure_x(u), SC::pure_x(v)), -1);
}

IdentityPtr reciprocal_mid(const FactoredRational& f, const FactoredRational& m,
                           const FactoredRational& h) {
    const FieldPtr& ctx = f.context();
    if (m.is_one()) throw invalid_argument_error("reciprocal_mid: trivial function");
    SC mid = SC::mixed(FactoredRational::one(ctx), m);
    return single_chain("reciprocal_mid",
                        "f = " + f.str() + "; m = " + m.str() + "; h = " + h.str(), ctx,
                        SurfaceTerm(SC::pure_x(f), mid, zcoord(ctx), SC::pure_x(h)), -1);
}

IdentityPtr reciprocal_right(const FactoredRational& f, const FactoredRational& g,
                             const FactoredRational& m) {
    const FieldPtr& ctx = f.context();
    if (m.is_one()) throw invalid_argument_error("reciprocal_right: trivial function");
    SC last = SC::mixed(FactoredRational::one(ctx), m);
    return single_chain("reciprocal_right",
                        "f = " + f.str() + "; g = " + g.str() + "; m = " + m.str(), ctx,
                        SurfaceTerm(SC::pure_x(f), SC::pure_x(g), last, zcoord(ctx)), -1);
}

IdentityPtr z_symmetry(const FieldElement& a, const FieldElement& c) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() || c.is_zero() || a.is_one())
        throw invalid_argument_error("z_symmetry needs a != 0, 1 and c != 0");
    FieldElement one = FieldElement::one(ctx);
    Rewriter rw(ctx);
    rw.apply(reciprocal(frac(a, one), cf(c), xvar(ctx)));
    CurveTerm bracket(frac(one, a), xvar(ctx), cf(c));
    if (rw.coeff_of(bracket) != 0)
        rw.eliminate(swap23(frac(one, a), cf(c), xvar(ctx)), bracket);
    return rw.finish("z_symmetry", a.str() + "; " + c.str());
}

IdentityPtr z_shift(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() || b.is_zero() || c.is_zero() || a == b)
        throw invalid_argument_error("z_shift needs distinct nonzero a, b and c != 0");
    // At a = -b the lifted term folds into its own swap partner and the
    // reduction is blocked by a two-torsion class; no exact form exists.
    if (a == -b)
        throw invalid_argument_error("z_shift is undefined at a = -b");
    std::string params = a.str() + "; " + b.str() + "; " + c.str();
    if (b.is_one()) {
        Rewriter rw(ctx);
        rw.apply(z_symmetry(a, c));
        return rw.finish("z_shift", params);
    }
    FieldElement one = FieldElement::one(ctx);
    FieldElement u = a * b.inverse();
    Rewriter rw(ctx);
    rw.apply(reciprocal(frac(a, b), cf(c), xvar(ctx)));
    CurveTerm bracket(frac(one, u), xvar(ctx), cf(c));
    if (rw.coeff_of(bracket) != 0)
        rw.eliminate(swap23(frac(one, u), cf(c), xvar(ctx)), bracket);
    CurveTerm shifted(frac(b, a), cf(c), xvar(ctx).scale(b.inverse()));
    rw.eliminate(product_rule(Slot::Right, xvar(ctx), cf(b.inverse()), frac(b, a), cf(c)),
                 shifted);
    return rw.finish("z_shift", params);
}

IdentityPtr z_split(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() || b.is_zero() || c.is_zero() || a == b)
        throw invalid_argument_error("z_split needs distinct nonzero a, b and c != 0");
    if (a == -b)
        throw invalid_argument_error("z_split is undefined at a = -b");
    Rewriter rw(ctx);
    rw.apply(swap23(frac(a, b), xvar(ctx), cf(c)));
    rw.eliminate(z_shift(a, b, c), CurveTerm(frac(a, b), cf(c), xvar(ctx)));
    if (!a.is_one() && a != c && rw.coeff_of(z_curve(a, c)) != 0)
        rw.eliminate(z_symmetry(a, c), z_curve(a, c));
    if (!b.is_one() && b != c && rw.coeff_of(z_curve(b, c)) != 0)
        rw.eliminate(z_symmetry(b, c), z_curve(b, c));
    return rw.finish("z_split", a.str() + "; " + b.str() + "; " + c.str());
}

IdentityPtr z_denominator_swap(const FieldElement& a, const FieldElement& b,
                               const FieldElement& c) {
    const FieldPtr& ctx = a.context();
    FieldElement u = a * b.inverse();
    Rewriter rw(ctx);
    rw.apply(z_split(a, b, c));
    rw.apply(z_split(a, u, c), -1);
    return rw.finish("z_denominator_swap", a.str() + "; " + b.str() + "; " + c.str());
}

IdentityPtr right_root_kill(const FactoredRational& f, const FactoredRational& g,
                            const FieldElement& zeta) {
    const FieldPtr& ctx = f.context();
    auto ord = zeta.root_of_unity_order();
    if (!ord || *ord < 2)
        throw invalid_argument_error("right_root_kill needs a nontrivial root of unity");
    Rewriter rw(ctx);
    for (unsigned k = 1; k < *ord; ++k)
        rw.apply(product_rule(Slot::Right, cf(zeta.pow(k)), cf(zeta), f, g));
    return rw.finish("right_root_kill",
                     "f = " + f.str() + "; g = " + g.str() + "; zeta = " + zeta.str());
}

IdentityPtr z_torsion_kill(const FieldElement& a, const FieldElement& zeta) {
    const FieldPtr& ctx = a.context();
    auto m = a.root_of_unity_order();
    auto n = zeta.root_of_unity_order();
    if (!m || !n || *m < 2 || *n < 2)
        throw invalid_argument_error("z_torsion_kill needs nontrivial roots of unity");
    FieldElement one = FieldElement::one(ctx);
    Rewriter rw(ctx);
    for (unsigned k = 1; k < *n; ++k)
        rw.apply(product_rule(Slot::Middle, cf(zeta.pow(k)), cf(zeta), frac(a, one), xvar(ctx)),
                 static_cast<long long>(*m));
    for (unsigned k = 1; k < *n; ++k) {
        CurveTerm bracket(frac(zeta.pow(k + 1), zeta.pow(k)), xvar(ctx), cf(a));
        if (rw.coeff_of(bracket) != 0)
            rw.eliminate(right_root_kill(frac(zeta.pow(k + 1), zeta.pow(k)), xvar(ctx), a),
                         bracket);
    }
    return rw.finish("z_torsion_kill", a.str() + "; " + zeta.str());
}

IdentityPtr z_inverse(const FieldElement& u, const FieldElement& v) {
    const FieldPtr& ctx = u.context();
    if (u.is_zero() || u.is_one() || v.is_zero())
        throw invalid_argument_error("z_inverse needs u != 0, 1 and v != 0");
    FieldElement one = FieldElement::one(ctx);
    FactoredRational X = xvar(ctx);
    FactoredRational Xinv = X.inverse();
    FactoredRational F = frac(u.inverse(), one);
    Rewriter rw(ctx);
    // Z(u, v) parametrized by 1/x equals u * (x - 1/u)/(x - 1) in the first slot.
    rw.apply(product_rule(Slot::Left, cf(u), F, cf(v), Xinv));
    rw.eliminate(reciprocal_right(F, cf(v), X), CurveTerm(F, cf(v), Xinv));
    return rw.finish("z_inverse", u.str() + "; " + v.str());
}

IdentityPtr two_term(const FieldElement& a) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() || a.is_one())
        throw invalid_argument_error("two_term needs a != 0, 1");
    FieldElement one = FieldElement::one(ctx);
    FieldElement zero = FieldElement::zero(ctx);
    FieldElement b = one - a;
    FactoredRational one_minus_x = FactoredRational::make(-one, {{one, 1}});
    Rewriter rw(ctx);
    rw.apply(product_rule(Slot::Left, frac(a, one), frac(one, zero), one_minus_x, xvar(ctx)));
    // The split-off piece equals ((x - (1-a))/x, x, 1-x) after x -> 1-x.
    CurveTerm piece(frac(b, zero), xvar(ctx), one_minus_x);
    rw.eliminate(swap23(frac(b, zero), xvar(ctx), one_minus_x), piece);
    if (!b.is_one() && b != a && rw.coeff_of(z_curve(b, a)) != 0)
        rw.eliminate(z_symmetry(b, a), z_curve(b, a));
    return rw.finish("two_term", a.str());
}

IdentityPtr distribution(const FieldElement& a, unsigned n) {
    const FieldPtr& ctx = a.context();
    if (a.is_zero() || n < 2)
        throw invalid_argument_error("distribution needs a != 0 and n >= 2");
    FieldElement one = FieldElement::one(ctx);
    FieldElement zero = FieldElement::zero(ctx);
    FieldElement zeta = FieldElement::root_of_unity(ctx, n);
    FactoredRational X = xvar(ctx);

    // f_j = (x - zeta^j a)/x and their running products.
    std::vector<FactoredRational> f, fpre;
    for (unsigned j = 0; j < n; ++j) {
        f.push_back(frac(zeta.pow(j) * a, zero));
        fpre.push_back(j == 0 ? f[0] : fpre[j - 1] * f[j]);
    }
    // g_i = 1 - zeta^i x and their running products; the full product is 1 - x^n.
    std::vector<FactoredRational> g, gpre;
    for (unsigned i = 0; i < n; ++i) {
        g.push_back(FactoredRational::make(-zeta.pow(i), {{zeta.pow(-(long)i), 1}}));
        gpre.push_back(i == 0 ? g[0] : gpre[i - 1] * g[i]);
    }
    FactoredRational F2 = gpre[n - 1];
    FactoredRational F3 = X.pow((int)n);

    Rewriter rw(ctx);
    for (unsigned j = n - 1; j >= 1; --j)
        rw.apply(product_rule(Slot::Left, fpre[j - 1], f[j], F2, F3));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned k = n - 1; k >= 1; --k) {
            CurveTerm target(f[j], gpre[k], F3);
            if (rw.coeff_of(target) == 0) continue;  // folded into another piece
            rw.eliminate(product_rule(Slot::Middle, gpre[k - 1], g[k], f[j], F3), target);
        }
    }
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned m = n - 1; m >= 1; --m) {
            CurveTerm target(f[k], g[0], X.pow((int)m + 1));
            if (rw.coeff_of(target) == 0) continue;
            rw.eliminate(product_rule(Slot::Right, X.pow((int)m), X, f[k], g[0]), target);
        }
    }
    return rw.finish("distribution", a.str() + "; n = " + std::to_string(n));
}

IdentityPtr five_term(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    FieldElement zero = FieldElement::zero(ctx);
    if (a.is_zero() || b.is_zero() || a.is_one() || b.is_one() || a == b || a == one - b)
        throw invalid_argument_error("five_term needs a, b outside {0, 1} with a != b, 1-b");
    FactoredRational X = xvar(ctx);
    // The cycle C_{a(1-b)/(b(1-a))} parametrized by t -> a(1-t)/(t(1-a)) has
    // coordinates (f1, f2, f3); f3 factors as h1*h2 and f2 as m1*m2 = m1p*m2p.
    FactoredRational f1 = frac(b, one).scale(b.inverse());                    // (b-t)/(b(1-t))
    FactoredRational f2 =
        FactoredRational::make((one - a).inverse(), {{a, 1}, {zero, -1}});    // (t-a)/(t(1-a))
    FactoredRational h1 = FactoredRational::make(-(one - a).inverse(), {{one, 1}});
    FactoredRational h2 = FactoredRational::make(a, {{zero, -1}});            // a/t
    FactoredRational g1 = frac(b, one);
    FactoredRational m1 = frac(a, zero);
    FactoredRational m2 = cf((one - a).inverse());
    FactoredRational m1p = FactoredRational::make((one - a).inverse(), {{a, 1}});
    FactoredRational m2p = FactoredRational::make(one, {{zero, -1}});         // 1/t
    FactoredRational u1 = FactoredRational::make(-b.inverse(), {{b, 1}});     // (b-t)/b
    FactoredRational u2 = FactoredRational::make(-one, {{one, -1}});          // 1/(1-t)
    FactoredRational one_minus_t = FactoredRational::make(-one, {{one, 1}});

    Rewriter rw(ctx);
    rw.apply(product_rule(Slot::Right, h1, h2, f1, f2));
    rw.eliminate(product_rule(Slot::Left, cf(b.inverse()), g1, f2, h1), CurveTerm(f1, f2, h1));
    rw.eliminate(product_rule(Slot::Middle, m1, m2, f1, h2), CurveTerm(f1, f2, h2));
    rw.eliminate(product_rule(Slot::Middle, m1p, m2p, g1, h1), CurveTerm(g1, f2, h1));
    rw.eliminate(product_rule(Slot::Left, u1, u2, m1, h2), CurveTerm(f1, m1, h2));
    rw.eliminate(reciprocal(one_minus_t, m1, h2), CurveTerm(u2, m1, h2));
    rw.eliminate(product_rule(Slot::Right, one_minus_t, cf((one - a).inverse()), g1, m2p),
                 CurveTerm(g1, m2p, h1));
    rw.eliminate(reciprocal_mid(g1, X, one_minus_t), CurveTerm(g1, m2p, one_minus_t));
    rw.eliminate(product_rule(Slot::Right, m2p, cf(a), f1, m2), CurveTerm(f1, m2, h2));
    rw.eliminate(product_rule(Slot::Left, cf(b.inverse()), g1, m2, m2p), CurveTerm(f1, m2, m2p));
    rw.eliminate(swap23(g1, m2, m2p), CurveTerm(g1, m2, m2p));
    return rw.finish("five_term", a.str() + "; " + b.str());
}

IdentityPtr five_term_sym(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    FieldElement ia = (one - a).inverse();
    FieldElement ib = b.inverse();
    // The symmetrized orientation needs Z-inversion at 1/(1-a) and 1/b,
    // which degenerates when either equals -1.
    if (ia == -one || ib == -one)
        throw invalid_argument_error("five_term_sym needs a != 2 and b != -1");
    Rewriter rw(ctx);
    rw.apply(five_term(a, b));
    rw.eliminate(z_inverse(ia, ib), z_curve(ia, ib));
    rw.eliminate(z_symmetry(one - a, ib), z_curve(one - a, ib));
    rw.eliminate(z_inverse(ib, one - a), z_curve(ib, one - a));
    return rw.finish("five_term_sym", a.str() + "; " + b.str());
}

IdentityPtr five_term_even(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    Rewriter rw(ctx);
    rw.apply(five_term(a, b), 2);
    const std::pair<FieldElement, FieldElement> units[] = {{one - a, a}, {b, one - b}};
    for (const auto& [u, v] : units) {
        if (u == -one) continue;
        CurveTerm t(frac(one, u), xvar(ctx), cf(v));
        if (rw.coeff_of(t) != 0) rw.eliminate(z_split(one, u, v), t);
    }
    return rw.finish("five_term_even", a.str() + "; " + b.str());
}

IdentityPtr inversion(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    if (a.is_zero() || b.is_zero() || a.is_one() || b.is_one())
        throw invalid_argument_error("inversion needs a, b outside {0, 1}");
    if (a == b || a == one - b || a * b == a + b)
        throw invalid_argument_error("inversion needs a outside {b, 1-b, b/(b-1)}");
    Rewriter rw(ctx);
    rw.apply(five_term(a, b), -1);
    rw.apply(five_term(a.inverse(), b.inverse()), -1);
    rw.apply(five_term(b, a), -1);
    rw.apply(five_term(b.inverse(), a.inverse()), -1);
    for (const FieldElement& v : {a, b, a.inverse(), b.inverse()}) {
        CurveTerm t = totaro_curve(one - v);
        if (rw.coeff_of(t) != 0) rw.eliminate(two_term(v), t);
    }
    return rw.finish("inversion", a.str() + "; " + b.str());
}

IdentityPtr inversion_even(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& ctx = a.context();
    FieldElement one = FieldElement::one(ctx);
    Rewriter rw(ctx);
    rw.apply(inversion(a, b), 2);
    for (const FieldElement& w : {a, b, a.inverse(), b.inverse()}) {
        const std::pair<FieldElement, FieldElement> units[] = {{w, one - w}, {one - w, w}};
        for (const auto& [u, v] : units) {
            if (u.is_zero() || u.is_one() || u == -one || v.is_zero()) continue;
            CurveTerm t(frac(one, u), xvar(ctx), cf(v));
            if (rw.coeff_of(t) != 0) rw.eliminate(z_split(one, u, v), t);
        }
    }
    return rw.finish("inversion_even", a.str() + "; " + b.str());
}

std::vector<IdentityPtr> standard_corpus() {
    std::vector<IdentityPtr> out;
    FieldPtr q = FieldContext::cyclotomic(1);
    FieldElement one = FieldElement::one(q);
    auto r = [&](long n, long d = 1) { return FieldElement::from_rational(q, Rational(n, d)); };
    FactoredRational X = xvar(q);
    FactoredRational g1 = frac(r(2), one);

    out.push_back(product_rule(Slot::Left, frac(r(3), one), frac(r(5), one), frac(r(7), one), X));
    out.push_back(product_rule(Slot::Middle, frac(r(3), one), cf(r(4)), frac(r(7), one), X));
    out.push_back(product_rule(Slot::Right, X, cf(r(2)), frac(r(3), r(5)), cf(r(7))));
    out.push_back(swap23(g1, frac(r(3), one), X));
    out.push_back(swap12(g1, frac(r(3), one), X));
    out.push_back(swap13(g1, frac(r(3), one), X));
    out.push_back(reciprocal(g1, frac(r(3), one), X));
    out.push_back(reciprocal_mid(g1, X, frac(r(3), one)));
    out.push_back(reciprocal_right(g1, frac(r(3), one), X));
    out.push_back(z_symmetry(r(2), r(3)));
    out.push_back(z_shift(r(2), r(3), r(5)));
    out.push_back(z_split(r(2), r(3), r(5)));
    out.push_back(z_split(one, r(3), r(5)));
    out.push_back(z_inverse(r(2), r(3)));
    out.push_back(z_denominator_swap(r(2), r(3), r(5)));
    out.push_back(two_term(-one));
    out.push_back(two_term(r(1, 2)));
    out.push_back(distribution(r(3), 2));
    out.push_back(distribution(one, 2));
    out.push_back(five_term(r(2), r(3)));
    out.push_back(five_term_sym(r(3), r(5)));
    out.push_back(five_term_even(r(2), r(3)));
    out.push_back(inversion(r(2), r(3)));
    out.push_back(inversion_even(r(2), r(3)));
    out.push_back(right_root_kill(g1, X, -one));
    out.push_back(z_torsion_kill(-one, -one));

    FieldPtr q4 = FieldContext::cyclotomic(4);
    FieldElement i = FieldElement::zeta_power(q4, 1);
    out.push_back(two_term(i));
    out.push_back(distribution(FieldElement::one(q4), 4));
    out.push_back(inversion_even(i, -i));
    out.push_back(right_root_kill(frac(FieldElement::one(q4) - i, FieldElement::one(q4)),
                                  xvar(q4), i));
    out.push_back(z_torsion_kill(i, -FieldElement::one(q4)));

    FieldPtr q3 = FieldContext::cyclotomic(3);
    out.push_back(distribution(FieldElement::one(q3), 3));
    out.push_back(two_term(FieldElement::zeta_power(q3, 1)));

    FieldPtr q5 = FieldContext::cyclotomic(5);
    FieldElement z5 = FieldElement::zeta_power(q5, 1);
    out.push_back(distribution(FieldElement::one(q5), 5));
    out.push_back(two_term(z5));
    out.push_back(five_term(z5 * z5 * z5, z5 * z5));
    return out;
}

CurveSum totaro_sum(const FieldElement& a, long long c) {
    CurveSum s;
    add_canonical(s, totaro_curve(a), c);
    return s;
}

CurveSum z_sum(const FieldElement& a, const FieldElement& b, long long c) {
    CurveSum s;
    add_canonical(s, z_curve(a, b), c);
    return s;
}

CurveSum bracket_sum(const FieldElement& a, const FieldElement& b, const FieldElement& u,
                     long long c) {
    CurveSum s;
    add_canonical(s, CurveTerm(frac(a, b), xvar(a.context()), cf(u)), c);
    return s;
}

}  // namespace rel

}  // namespace chow
