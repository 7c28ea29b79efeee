#include "chow/numfield.hpp"

#include <complex>

#include "doctest.h"

using namespace chow;

TEST_CASE("cyclotomic polynomial coefficients") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<Rational>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(15) ==
          std::vector<Rational>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("field context basics") {
    auto q = FieldContext::cyclotomic(1);
    CHECK(q->degree() == 1);
    CHECK(q->max_root_order() == 2);

    auto q5 = FieldContext::cyclotomic(5);
    CHECK(q5->degree() == 4);
    CHECK(q5->max_root_order() == 10);

    auto q8 = FieldContext::cyclotomic(8);
    CHECK(q8->degree() == 4);
    CHECK(q8->max_root_order() == 8);

    CHECK(embedding_indices(*q5) == std::vector<unsigned>{1, 2, 3, 4});
    CHECK(embedding_indices(*q8) == std::vector<unsigned>{1, 3, 5, 7});
}

TEST_CASE("arithmetic in Q(zeta5)") {
    auto ctx = FieldContext::cyclotomic(5);
    auto z = FieldElement::zeta_power(ctx, 1);

    CHECK(z.pow(5).is_one());
    CHECK(z.pow(4) == z.inverse());
    CHECK((z.pow(4) + z.pow(3) + z.pow(2) + z + FieldElement::one(ctx)).is_zero());

    auto golden = z + z.pow(4);
    auto one = FieldElement::one(ctx);
    CHECK(golden * golden + golden - one == FieldElement::zero(ctx));

    auto v = golden.embed(1);
    CHECK(std::abs(v - std::complex<double>(0.61803398874989485, 0.0)) < 1e-12);

    CHECK(z.root_of_unity_order() == 5);
    CHECK((-one).root_of_unity_order() == 2);
    CHECK((-z).root_of_unity_order() == 10);
    CHECK_FALSE(golden.root_of_unity_order().has_value());

    auto mu10 = FieldElement::root_of_unity(ctx, 10);
    CHECK(mu10.root_of_unity_order() == 10);
    CHECK(mu10.pow(5) == -one);
}

TEST_CASE("inverse round trips") {
    auto ctx = FieldContext::cyclotomic(8);
    auto z = FieldElement::zeta_power(ctx, 1);
    auto one = FieldElement::one(ctx);
    auto a = z.pow(3) - FieldElement::from_rational(ctx, Rational(3, 2)) * z + one;
    CHECK((a * a.inverse()).is_one());
    CHECK((a / a).is_one());
    CHECK(a.pow(-2) == (a * a).inverse());
    CHECK_THROWS_AS(FieldElement::zero(ctx).inverse(), arithmetic_error);
}

TEST_CASE("rational detection and parsing") {
    auto ctx = FieldContext::cyclotomic(12);
    auto z = FieldElement::zeta_power(ctx, 1);
    // zeta12^2 has trace contributions but zeta12^3 = i, zeta12^6 = -1
    CHECK((z.pow(6) + FieldElement::one(ctx)).is_zero());
    CHECK(z.pow(6).is_rational());
    CHECK(z.pow(6).as_rational() == Rational(-1));
    CHECK_FALSE(z.is_rational());

    auto e = FieldElement::parse(ctx, "1/2 - 3*g^2 + g^3");
    CHECK(e.str() == "1/2 - 3*g^2 + g^3");
    CHECK(FieldElement::parse(ctx, e.str()) == e);
    CHECK(FieldElement::parse(ctx, "-g") == -z);
    CHECK(FieldElement::parse(ctx, "7/3") ==
          FieldElement::from_rational(ctx, Rational(7, 3)));
    CHECK_THROWS_AS(FieldElement::parse(ctx, "1 + *"), parse_error);
}

TEST_CASE("embeddings are ring maps") {
    auto ctx = FieldContext::cyclotomic(5);
    auto z = FieldElement::zeta_power(ctx, 1);
    auto a = z + z * z;
    auto b = z.pow(3) - FieldElement::from_int(ctx, 2);
    for (unsigned k : embedding_indices(*ctx)) {
        auto pa = a.embed(k), pb = b.embed(k);
        CHECK(std::abs((a * b).embed(k) - pa * pb) < 1e-12);
        CHECK(std::abs((a + b).embed(k) - (pa + pb)) < 1e-12);
    }
    CHECK(std::abs(z.embed(2) - std::polar(1.0, 4.0 * 3.14159265358979323846 / 5.0)) <
          1e-12);
    CHECK_THROWS_AS(z.embed(5), invalid_embedding_error);
}

TEST_CASE("extended values") {
    auto ctx = FieldContext::cyclotomic(1);
    ExtendedValue inf = ExtendedValue::infinity();
    ExtendedValue two{FieldElement::from_int(ctx, 2)};
    CHECK(inf == ExtendedValue::infinity());
    CHECK(inf != two);
    CHECK((two <=> inf) == std::strong_ordering::less);
    CHECK(inf.str() == "inf");
    CHECK_THROWS_AS(inf.value(), arithmetic_error);
}

TEST_CASE("context separation") {
    auto a = FieldElement::one(FieldContext::cyclotomic(5));
    auto b = FieldElement::one(FieldContext::cyclotomic(8));
    CHECK_THROWS_AS(a + b, context_mismatch_error);
}
