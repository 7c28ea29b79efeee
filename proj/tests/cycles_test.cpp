#include "chow/cycles.hpp"

#include "doctest.h"

using namespace chow;

namespace {
FieldPtr Q() { return FieldContext::cyclotomic(1); }

FieldElement fe(const FieldPtr& ctx, long n, long d = 1) {
    return FieldElement::from_rational(ctx, Rational(n, d));
}
}  // namespace

TEST_CASE("classification") {
    auto ctx = Q();
    auto t = totaro_curve(fe(ctx, 3));
    CHECK(t.classify() == TermClass::Generic);
    CHECK(z_curve(fe(ctx, 2), fe(ctx, 3)).classify() == TermClass::Generic);

    auto x = FactoredRational::x(ctx);
    auto c2 = FactoredRational::constant(fe(ctx, 2));
    auto one = FactoredRational::one(ctx);
    CHECK(CurveTerm(x, one, c2).classify() == TermClass::Zero);
    CHECK(CurveTerm(c2, c2, x).classify() == TermClass::Degenerate);
    CHECK(CurveTerm(c2, x, x).classify() == TermClass::ZPrime);
    CHECK(CurveTerm(x, c2, x).classify() == TermClass::Generic);
}

TEST_CASE("boundary of basic curves") {
    auto ctx = Q();
    auto a = fe(ctx, 3);
    auto b = boundary_curve(totaro_curve(a));
    PointSum expected;
    expected.add(PointTerm(fe(ctx, -2), fe(ctx, 3)), 1);
    CHECK(b == expected);

    CHECK(boundary_curve(totaro_curve(fe(ctx, 1))).is_zero());

    auto bz = boundary_curve(z_curve(fe(ctx, 2), fe(ctx, 3)));
    PointSum ez;
    ez.add(PointTerm(fe(ctx, 3), fe(ctx, 2)), 1);
    ez.add(PointTerm(fe(ctx, 2), fe(ctx, 3)), 1);
    CHECK(bz == ez);
}

TEST_CASE("admissibility") {
    auto ctx = Q();
    CHECK(admissible_curve(totaro_curve(fe(ctx, 5, 7))).admissible);
    CHECK(admissible_curve(totaro_curve(fe(ctx, 1))).admissible);
    CHECK(admissible_curve(z_curve(fe(ctx, 2), fe(ctx, 3))).admissible);

    auto x = FactoredRational::x(ctx);
    auto bad = CurveTerm(x, x, FactoredRational::constant(fe(ctx, 2)));
    auto rep = admissible_curve(bad);
    CHECK_FALSE(rep.admissible);
    CHECK_FALSE(rep.witness.empty());
    CHECK_THROWS_AS(boundary_curve(bad), inadmissible_error);
}

TEST_CASE("closedness criterion") {
    auto ctx = FieldContext::cyclotomic(4);
    auto i = FieldElement::zeta_power(ctx, 1);
    auto ci = totaro_curve(i);
    PointSum b4 = boundary_curve(ci) * 4;
    CHECK(closedness_check(b4).closed);
    auto r = closedness_check(boundary_curve(ci));
    CHECK_FALSE(r.closed);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("descent along power maps") {
    auto ctx = Q();
    auto a = fe(ctx, 2);
    // Pullback of the basic curve at a^2 along x -> x^2.
    auto f1 = FactoredRational::make(fe(ctx, 1), {{a, 1}, {-a, 1}, {fe(ctx, 0), -2}});
    auto f2 = FactoredRational::make(fe(ctx, -1), {{fe(ctx, 1), 1}, {fe(ctx, -1), 1}});
    auto f3 = FactoredRational::make(fe(ctx, 1), {{fe(ctx, 0), 2}});
    CurveTerm pulled(f1, f2, f3);

    auto once = descend_once(pulled, 2);
    REQUIRE(once.has_value());
    CHECK(*once == totaro_curve(fe(ctx, 4)));

    auto maximal = descend_maximal(pulled);
    CHECK(maximal.term == totaro_curve(fe(ctx, 4)));
    CHECK(maximal.multiplier == 2);

    CHECK_FALSE(descend_once(totaro_curve(a), 2).has_value());
}

TEST_CASE("canonical form is a reparametrization invariant") {
    auto ctx = Q();
    auto t = z_curve(fe(ctx, 2), fe(ctx, 3));
    Mobius m(fe(ctx, 2), fe(ctx, 1), fe(ctx, 1), fe(ctx, 3));
    auto moved = reparam_curve(t, m);
    CHECK_FALSE(moved == t);
    CHECK(canonical_form(moved).term == canonical_form(t).term);
    CHECK(canonical_form(moved).multiplier == canonical_form(t).multiplier);

    CurveSum s;
    add_canonical(s, t, 1);
    add_canonical(s, moved, -1);
    CHECK(s.is_zero());
}

TEST_CASE("surface boundary: middle swap chain") {
    auto ctx = Q();
    // [f, (z-3)/(z-1), g, z] with f = (x-2)/(x-1), g = x.
    auto f = FactoredRational::make(fe(ctx, 1), {{fe(ctx, 2), 1}, {fe(ctx, 1), -1}});
    auto g = FactoredRational::x(ctx);
    Mobius zmap(fe(ctx, 1), fe(ctx, -3), fe(ctx, 1), fe(ctx, -1));
    SurfaceTerm T(SurfaceCoordinate::pure_x(f), SurfaceCoordinate::pure_z(zmap),
                  SurfaceCoordinate::pure_x(g), SurfaceCoordinate::pure_z(Mobius::identity(ctx)));

    CurveSum b = boundary_surface(T);

    // Raw boundary: -[f,g,3] - [f,3,g] + Z(3,2)-shape + one constant-first term.
    auto c3 = FactoredRational::constant(fe(ctx, 3));
    CHECK(b.coeff(CurveTerm(f, g, c3)) == -1);
    CHECK(b.coeff(CurveTerm(f, c3, g)) == -1);
    CHECK(b.size() == 4);

    // The boundary of the boundary vanishes identically.
    PointSum dd;
    for (const auto& [term, c] : b.terms()) dd.add(boundary_curve(term), c);
    CHECK(dd.is_zero());

    // In the quotient: -[f,g,3] - [f,3,g] + Z(3,2) modulo discarded classes.
    NormalizedSum nq = normalize_quotient(b);
    CurveSum expected;
    add_canonical(expected, CurveTerm(f, g, c3), -1);
    add_canonical(expected, CurveTerm(f, c3, g), -1);
    add_canonical(expected, z_curve(fe(ctx, 3), fe(ctx, 2)), 1);
    CHECK(nq.kept == expected);
    CHECK(nq.discarded.size() == 1);
    CHECK(nq.discarded[0].cls == TermClass::ZPrime);
}

TEST_CASE("surface boundary with a mixed coordinate") {
    auto ctx = Q();
    // [(z-1)/(z-x), z, 3, (x-2)/(x-5)]
    auto c = SurfaceCoordinate::mixed(FactoredRational::one(ctx), FactoredRational::x(ctx));
    auto g = FactoredRational::make(fe(ctx, 1), {{fe(ctx, 2), 1}, {fe(ctx, 5), -1}});
    SurfaceTerm T(c, SurfaceCoordinate::pure_z(Mobius::identity(ctx)),
                  SurfaceCoordinate::pure_x(FactoredRational::constant(fe(ctx, 3))),
                  SurfaceCoordinate::pure_x(g));

    CurveSum b = boundary_surface(T);
    CHECK_FALSE(b.is_zero());

    PointSum dd;
    for (const auto& [term, cc] : b.terms()) dd.add(boundary_curve(term), cc);
    CHECK(dd.is_zero());
}

TEST_CASE("formal sums") {
    auto ctx = Q();
    CurveSum s;
    auto t = totaro_curve(fe(ctx, 2));
    s.add(t, 3);
    s.add(t, -3);
    CHECK(s.is_zero());
    s.add(t, 2);
    CHECK((s * 2).coeff(t) == 4);
    CHECK((-s).coeff(t) == -2);
}
