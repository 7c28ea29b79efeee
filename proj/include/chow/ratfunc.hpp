#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chow/numfield.hpp"

namespace chow {

// A rational function kept in factored form: unit * prod (x - r)^e.
// Never identically 0 or infinity; exponents are nonzero.
class FactoredRational {
  public:
    static FactoredRational constant(FieldElement unit);
    static FactoredRational one(const FieldPtr& ctx);
    // The coordinate function x itself.
    static FactoredRational x(const FieldPtr& ctx);
    // unit * prod (x - r)^e for the given factor list.
    static FactoredRational make(FieldElement unit,
                                 std::vector<std::pair<FieldElement, int>> factors);
    // (a*x + b) / (c*x + d); the result may be constant.
    static FactoredRational linear_fraction(const FieldElement& a, const FieldElement& b,
                                            const FieldElement& c, const FieldElement& d);

    const FieldPtr& context() const { return ctx_; }
    const FieldElement& unit() const { return unit_; }
    const std::map<FieldElement, int>& factors() const { return factors_; }

    bool is_constant() const { return factors_.empty(); }
    bool is_one() const { return factors_.empty() && unit_.is_one(); }

    int numerator_degree() const;
    int denominator_degree() const;
    int total_degree() const;  // numerator minus denominator degree

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational inverse() const;
    FactoredRational pow(int e) const;
    FactoredRational scale(const FieldElement& c) const;  // c * f

    // Total evaluation on P^1.
    ExtendedValue eval(const ExtendedValue& x0) const;
    // Zeros and poles with multiplicities, including the point at infinity.
    std::vector<std::pair<ExtendedValue, int>> divisor() const;
    // Pole order at x0 (0 if no pole there).
    int pole_order(const ExtendedValue& x0) const;

    // f composed with a Mobius map (precomposition: returns f(m(x))).
    FactoredRational reparam(const class Mobius& m) const;

    // Mobius form when the function is fractional-linear and nonconstant.
    std::optional<class Mobius> to_mobius() const;

    bool operator==(const FactoredRational& o) const;
    std::strong_ordering operator<=>(const FactoredRational& o) const;

    std::string str() const;

  private:
    FactoredRational(FieldPtr ctx, FieldElement unit, std::map<FieldElement, int> factors);
    FieldPtr ctx_;
    FieldElement unit_;
    std::map<FieldElement, int> factors_;
};

// An invertible map (a*x + b)/(c*x + d), stored with a normalized scale.
class Mobius {
  public:
    Mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
    static Mobius identity(const FieldPtr& ctx);
    // The unique map sending (p, q, r) to (0, 1, infinity).
    static Mobius sending_to_standard(const ExtendedValue& p, const ExtendedValue& q,
                                      const ExtendedValue& r);

    const FieldPtr& context() const;
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    bool is_identity() const;
    ExtendedValue apply(const ExtendedValue& v) const;
    ExtendedValue preimage_of_zero() const;      // -b/a or infinity
    ExtendedValue preimage_of_infinity() const;  // -d/c or infinity
    Mobius inverse() const;
    Mobius compose(const Mobius& inner) const;  // this(inner(x))

    // The same map as a factored rational function of its variable.
    FactoredRational to_factored() const;

    bool operator==(const Mobius& o) const;
    std::strong_ordering operator<=>(const Mobius& o) const;

    std::string str() const;

  private:
    FieldElement a_, b_, c_, d_;
};

// Result of restricting a surface coordinate to a curve: either a genuine
// rational function, or a constant that left the function class (0 or inf).
using Restriction = std::variant<FactoredRational, ExtendedValue>;

bool restriction_is_one(const Restriction& r);

// One coordinate of a surface parametrized by (x, z).
class SurfaceCoordinate {
  public:
    struct PureX {
        FactoredRational f;  // depends on x only
    };
    struct PureZ {
        Mobius m;  // an invertible function of z only
    };
    struct Mixed {
        FactoredRational p;                 // (z - P(x)) / (z - Q(x))
        std::optional<FactoredRational> q;  // absent denominator means z - P(x)
    };

    static SurfaceCoordinate pure_x(FactoredRational f);
    static SurfaceCoordinate pure_z(Mobius m);
    // Collapses to PureZ when both parts are constant.
    static SurfaceCoordinate mixed(FactoredRational p, std::optional<FactoredRational> q);

    const FieldPtr& context() const { return ctx_; }
    bool is_pure_x() const;
    bool is_pure_z() const;
    bool is_mixed() const;
    const PureX& as_pure_x() const;
    const PureZ& as_pure_z() const;
    const Mixed& as_mixed() const;

    // Divisor on P^1 x P^1.
    struct DivComponent {
        enum class Kind { Vertical, Horizontal, Graph };
        Kind kind;
        ExtendedValue at;          // x0 for Vertical, z0 for Horizontal
        std::optional<FactoredRational> graph;  // z = graph(x), nonconstant
    };
    std::vector<std::pair<DivComponent, int>> divisor() const;

    Restriction restrict_to_vertical(const ExtendedValue& x0) const;
    Restriction restrict_to_horizontal(const ExtendedValue& z0) const;
    Restriction restrict_to_graph(const FactoredRational& p) const;
    Restriction restrict_to(const DivComponent& comp) const;

    bool operator==(const SurfaceCoordinate& o) const;
    std::strong_ordering operator<=>(const SurfaceCoordinate& o) const;

    std::string str() const;

  private:
    SurfaceCoordinate(FieldPtr ctx, std::variant<PureX, PureZ, Mixed> v);
    FieldPtr ctx_;
    std::variant<PureX, PureZ, Mixed> v_;
};

}  // namespace chow
