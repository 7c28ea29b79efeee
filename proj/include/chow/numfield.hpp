#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow/errors.hpp"

namespace chow {

using Rational = mpq_class;

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

// A cyclotomic field Q(zeta_n) presented as Q[g]/(Phi_n(g)).
class FieldContext {
  public:
    // Creates the field with the given conductor (n >= 1).
    static FieldPtr cyclotomic(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }

    // Monic minimal polynomial of g, coefficients low to high, size degree+1.
    const std::vector<Rational>& modulus() const { return modulus_; }

    // Largest w such that Q(zeta_n) contains the w-th roots of unity.
    unsigned max_root_order() const { return conductor_ % 2 ? 2 * conductor_ : conductor_; }

    bool same(const FieldContext& other) const;

  private:
    explicit FieldContext(unsigned conductor);
    unsigned conductor_;
    unsigned degree_;
    std::vector<Rational> modulus_;
};

// Integer coefficient vector of the n-th cyclotomic polynomial, low to high.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

// An element of a cyclotomic field, reduced modulo the defining polynomial.
class FieldElement {
  public:
    FieldElement(FieldPtr ctx, std::vector<Rational> coeffs);

    static FieldElement zero(const FieldPtr& ctx);
    static FieldElement one(const FieldPtr& ctx);
    static FieldElement from_rational(const FieldPtr& ctx, const Rational& q);
    static FieldElement from_int(const FieldPtr& ctx, long v);
    // g^power reduced into the field, power may be negative.
    static FieldElement zeta_power(const FieldPtr& ctx, long power);
    // A primitive m-th root of unity; m must divide max_root_order().
    static FieldElement root_of_unity(const FieldPtr& ctx, unsigned m);

    const FieldPtr& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Value as a rational, if the element lies in the prime field.
    std::optional<Rational> as_rational() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Total order (lexicographic on coefficients), used for canonical maps.
    std::strong_ordering operator<=>(const FieldElement& o) const;

    // Multiplicative order if the element is a root of unity.
    std::optional<unsigned> root_of_unity_order() const;

    // Image under g -> exp(2*pi*i*k/n); k must be coprime to the conductor.
    std::complex<double> embed(unsigned k) const;

    // Polynomial-in-g text form, e.g. "1/2 - 3*g^2 + g^3".
    std::string str() const;
    static FieldElement parse(const FieldPtr& ctx, std::string_view text);

  private:
    FieldPtr ctx_;
    std::vector<Rational> c_;  // size == ctx_->degree()
};

// A point of P^1(F): a field value or the point at infinity.
class ExtendedValue {
  public:
    ExtendedValue(FieldElement v) : v_(std::move(v)) {}  // NOLINT: implicit by design
    static ExtendedValue infinity() { return ExtendedValue(); }

    bool is_infinity() const { return !v_.has_value(); }
    const FieldElement& value() const {
        if (!v_) throw arithmetic_error("value() on the point at infinity");
        return *v_;
    }

    bool operator==(const ExtendedValue& o) const;
    bool operator!=(const ExtendedValue& o) const { return !(*this == o); }
    // Finite values first (by field order), infinity last.
    std::strong_ordering operator<=>(const ExtendedValue& o) const;

    std::string str() const;

  private:
    ExtendedValue() = default;
    std::optional<FieldElement> v_;
};

// List of embedding indices k (coprime residues mod n), one per conjugate.
std::vector<unsigned> embedding_indices(const FieldContext& ctx);

void require_same_context(const FieldElement& a, const FieldElement& b);

}  // namespace chow
