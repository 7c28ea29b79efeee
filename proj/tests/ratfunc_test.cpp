#include "chow/ratfunc.hpp"

#include <algorithm>

#include "doctest.h"

using namespace chow;

namespace {
FieldPtr Q() { return FieldContext::cyclotomic(1); }

FieldElement fe(const FieldPtr& ctx, long n, long d = 1) {
    return FieldElement::from_rational(ctx, Rational(n, d));
}
}  // namespace

TEST_CASE("factored rational basics") {
    auto ctx = Q();
    auto f = FactoredRational::linear_fraction(fe(ctx, 1), fe(ctx, 1), fe(ctx, 1), fe(ctx, -1));
    // (x + 1)/(x - 1)
    CHECK(f.eval(fe(ctx, 2)) == ExtendedValue(fe(ctx, 3)));
    CHECK(f.eval(ExtendedValue::infinity()) == ExtendedValue(fe(ctx, 1)));
    CHECK(f.eval(fe(ctx, 1)) == ExtendedValue::infinity());
    CHECK(f.eval(fe(ctx, -1)) == ExtendedValue(fe(ctx, 0)));
    CHECK(f.total_degree() == 0);

    auto g = FactoredRational::make(fe(ctx, 1), {{fe(ctx, 2), 2}, {fe(ctx, 3), -1}});
    // (x-2)^2/(x-3): divisor has 2 at x=2, -1 at x=3, -1 at infinity.
    auto div = g.divisor();
    CHECK(div.size() == 3);
    long long total = 0;
    for (const auto& [pt, e] : div) total += e;
    CHECK(total == 0);
    CHECK(g.pole_order(ExtendedValue::infinity()) == 1);
    CHECK(g.pole_order(ExtendedValue(fe(ctx, 3))) == 1);
    CHECK(g.pole_order(ExtendedValue(fe(ctx, 2))) == 0);

    CHECK((g * g.inverse()).is_one());
    CHECK(g.pow(2) == g * g);
    CHECK(g.pow(0).is_one());
}

TEST_CASE("merging factors") {
    auto ctx = Q();
    auto one = fe(ctx, 1);
    auto f = FactoredRational::make(one, {{one, 1}, {one, -1}});
    CHECK(f.is_one());
}

TEST_CASE("mobius maps") {
    auto ctx = Q();
    Mobius m(fe(ctx, 2), fe(ctx, 1), fe(ctx, 1), fe(ctx, -1));  // (2x+1)/(x-1)
    CHECK(m.apply(fe(ctx, 0)) == ExtendedValue(fe(ctx, -1)));
    CHECK(m.apply(ExtendedValue::infinity()) == ExtendedValue(fe(ctx, 2)));
    CHECK(m.apply(fe(ctx, 1)) == ExtendedValue::infinity());
    CHECK(m.compose(m.inverse()).is_identity());
    CHECK(m.inverse().compose(m).is_identity());

    auto f = m.to_factored();
    CHECK(f.to_mobius() == m);
    for (long v : {0L, 2L, 5L, -3L})
        CHECK(f.eval(fe(ctx, v)) == m.apply(fe(ctx, v)));

    ExtendedValue inf = ExtendedValue::infinity();
    auto pts = {ExtendedValue(fe(ctx, 4)), ExtendedValue(fe(ctx, -1)), inf};
    std::vector<ExtendedValue> v(pts);
    Mobius s = Mobius::sending_to_standard(v[0], v[1], v[2]);
    CHECK(s.apply(v[0]) == ExtendedValue(fe(ctx, 0)));
    CHECK(s.apply(v[1]) == ExtendedValue(fe(ctx, 1)));
    CHECK(s.apply(v[2]) == inf);

    Mobius s2 = Mobius::sending_to_standard(inf, ExtendedValue(fe(ctx, 2)), ExtendedValue(fe(ctx, 7)));
    CHECK(s2.apply(inf) == ExtendedValue(fe(ctx, 0)));
    CHECK(s2.apply(fe(ctx, 2)) == ExtendedValue(fe(ctx, 1)));
    CHECK(s2.apply(fe(ctx, 7)) == ExtendedValue::infinity());
}

TEST_CASE("reparametrization") {
    auto ctx = Q();
    Mobius m(fe(ctx, 1), fe(ctx, 1), fe(ctx, 1), fe(ctx, -1));  // (x+1)/(x-1)
    auto f = FactoredRational::make(fe(ctx, 1), {{fe(ctx, 3), 1}, {fe(ctx, 0), -2}});
    auto g = f.reparam(m);
    // Check pointwise: g(x) = f(m(x)).
    for (long v : {0L, 2L, 5L, -4L})
        CHECK(g.eval(fe(ctx, v)) == f.eval(m.apply(fe(ctx, v))));
    CHECK(g.eval(ExtendedValue::infinity()) == f.eval(m.apply(ExtendedValue::infinity())));
    // Composing with the inverse map restores the function.
    CHECK(g.reparam(m.inverse()) == f);
}

TEST_CASE("surface coordinate divisors and restrictions") {
    auto ctx = Q();
    auto x = FactoredRational::x(ctx);

    SUBCASE("pure x") {
        auto c = SurfaceCoordinate::pure_x(x);
        auto div = c.divisor();
        CHECK(div.size() == 2);
        for (const auto& [comp, e] : div)
            CHECK(comp.kind == SurfaceCoordinate::DivComponent::Kind::Vertical);
        auto r = c.restrict_to_horizontal(ExtendedValue(fe(ctx, 5)));
        CHECK(std::get<FactoredRational>(r) == x);
        auto rv = c.restrict_to_vertical(ExtendedValue(fe(ctx, 5)));
        CHECK(std::get<FactoredRational>(rv) == FactoredRational::constant(fe(ctx, 5)));
        auto r0 = c.restrict_to_vertical(ExtendedValue(fe(ctx, 0)));
        CHECK(std::holds_alternative<ExtendedValue>(r0));
    }

    SUBCASE("pure z") {
        Mobius m(fe(ctx, 1), fe(ctx, -3), fe(ctx, 1), fe(ctx, -1));  // (z-3)/(z-1)
        auto c = SurfaceCoordinate::pure_z(m);
        auto div = c.divisor();
        REQUIRE(div.size() == 2);
        CHECK(div[0].first.kind == SurfaceCoordinate::DivComponent::Kind::Horizontal);
        CHECK(div[0].first.at == ExtendedValue(fe(ctx, 3)));
        CHECK(div[0].second == 1);
        CHECK(div[1].first.at == ExtendedValue(fe(ctx, 1)));
        CHECK(div[1].second == -1);
        auto r = c.restrict_to_horizontal(ExtendedValue(fe(ctx, 0)));
        CHECK(std::get<FactoredRational>(r) == FactoredRational::constant(fe(ctx, 3)));
        auto rg = c.restrict_to_graph(x);
        // (x-3)/(x-1)
        CHECK(std::get<FactoredRational>(rg) ==
              FactoredRational::make(fe(ctx, 1), {{fe(ctx, 3), 1}, {fe(ctx, 1), -1}}));
    }

    SUBCASE("mixed z - x") {
        auto c = SurfaceCoordinate::mixed(x, std::nullopt);
        auto div = c.divisor();
        // graph z = x, horizontal z = inf, vertical x = inf
        int graphs = 0, horizontals = 0, verticals = 0;
        for (const auto& [comp, e] : div) {
            using K = SurfaceCoordinate::DivComponent::Kind;
            if (comp.kind == K::Graph) graphs += e;
            if (comp.kind == K::Horizontal) horizontals += e;
            if (comp.kind == K::Vertical) verticals += e;
        }
        CHECK(graphs == 1);
        CHECK(horizontals == -1);
        CHECK(verticals == -1);
        auto rv = c.restrict_to_vertical(ExtendedValue(fe(ctx, 2)));
        // z - 2
        CHECK(std::get<FactoredRational>(rv) ==
              FactoredRational::make(fe(ctx, 1), {{fe(ctx, 2), 1}}));
        auto rh = c.restrict_to_horizontal(ExtendedValue(fe(ctx, 4)));
        // 4 - x = -(x - 4)
        CHECK(std::get<FactoredRational>(rh) ==
              FactoredRational::make(fe(ctx, -1), {{fe(ctx, 4), 1}}));
    }

    SUBCASE("mixed ratio (z - 2x)/(z - x)") {
        auto two_x = x.scale(fe(ctx, 2));
        auto c = SurfaceCoordinate::mixed(two_x, x);
        auto rv = c.restrict_to_vertical(ExtendedValue(fe(ctx, 3)));
        // (z-6)/(z-3)
        CHECK(std::get<FactoredRational>(rv) ==
              FactoredRational::make(fe(ctx, 1), {{fe(ctx, 6), 1}, {fe(ctx, 3), -1}}));
        auto r0 = c.restrict_to_vertical(ExtendedValue(fe(ctx, 0)));
        // both parts vanish: ratio of z-coefficients is 1, tangential
        CHECK(restriction_is_one(r0));
        auto rinf = c.restrict_to_vertical(ExtendedValue::infinity());
        CHECK(std::get<FactoredRational>(rinf) == FactoredRational::constant(fe(ctx, 2)));
        auto rh = c.restrict_to_horizontal(ExtendedValue(fe(ctx, 0)));
        CHECK(std::get<FactoredRational>(rh) == FactoredRational::constant(fe(ctx, 2)));
    }

    SUBCASE("collapses to pure z") {
        auto c = SurfaceCoordinate::mixed(FactoredRational::constant(fe(ctx, 2)),
                                          FactoredRational::constant(fe(ctx, 5)));
        CHECK(c.is_pure_z());
    }
}
