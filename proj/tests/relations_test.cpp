#include <doctest.h>

#include <iostream>

#include "chow/relations.hpp"

using namespace chow;
using namespace chow::rel;

namespace {
FieldElement q(const FieldPtr& ctx, long num, long den = 1) {
    return FieldElement::from_rational(ctx, Rational(num, den));
}
}  // namespace

TEST_CASE("exploration dump") {
    auto Q = FieldContext::cyclotomic(1);
    auto a = q(Q, 3);
    auto b = q(Q, 5);
    auto c = q(Q, 7);
    for (auto& id : {z_symmetry(a, c), z_shift(a, b, c), z_split(a, b, c),
                     z_denominator_swap(a, b, c), two_term(a)}) {
        id->verify();
        std::cout << id->describe() << ":\n" << sum_str(id->claim()) << "\n\n";
    }
    auto Q4 = FieldContext::cyclotomic(4);
    auto i4 = FieldElement::zeta_power(Q4, 1);
    auto d2 = distribution(q(Q4, 3), 2);
    d2->verify();
    std::cout << d2->describe() << ":\n" << sum_str(d2->claim()) << "\n\n";
    auto zt = z_torsion_kill(i4, -FieldElement::one(Q4));
    zt->verify();
    std::cout << zt->describe() << ":\n" << sum_str(zt->claim()) << "\n\n";
    auto rrk = right_root_kill(FactoredRational::linear_fraction(
                                   FieldElement::one(Q4), -q(Q4, 3), FieldElement::one(Q4),
                                   -q(Q4, 5)),
                               FactoredRational::x(Q4), i4);
    rrk->verify();
    std::cout << rrk->describe() << ":\n" << sum_str(rrk->claim()) << "\n\n";
}
