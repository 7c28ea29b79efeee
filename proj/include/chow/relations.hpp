#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chow/cycles.hpp"

namespace chow {

class Identity;
using IdentityPtr = std::shared_ptr<const Identity>;

// A proved relation: the canonical curve sum `claim` is zero in the quotient
// of curves modulo boundaries of admissible surfaces. Every identity carries
// its own evidence: explicit bounding surface chains plus previously proved
// identities it was combined from. verify() replays the whole derivation.
class Identity {
public:
    using Part = std::pair<IdentityPtr, long long>;

    static IdentityPtr make(std::string name, std::string params, FieldPtr ctx,
                            SurfaceSum chains, std::vector<Part> parts);
    // Attach an externally supplied claim (deserialized or mutated data);
    // verify() recomputes the claim and compares.
    static IdentityPtr with_claim(std::string name, std::string params, FieldPtr ctx,
                                  SurfaceSum chains, std::vector<Part> parts,
                                  CurveSum claim);

    const std::string& name() const { return name_; }
    const std::string& params() const { return params_; }
    std::string describe() const;
    const FieldPtr& context() const { return ctx_; }
    const SurfaceSum& chains() const { return chains_; }
    const std::vector<Part>& parts() const { return parts_; }
    const CurveSum& claim() const { return claim_; }
    const std::vector<DiscardedTerm>& discarded() const { return discarded_; }

    // Recursively replays the derivation: recomputes the normalized boundary
    // of the chains, checks the boundary of the boundary vanishes, adds the
    // parts and compares against the stored claim. Memoized per identity.
    void verify() const;

private:
    Identity() = default;
    std::string name_, params_;
    FieldPtr ctx_;
    SurfaceSum chains_;
    std::vector<Part> parts_;
    CurveSum claim_;
    std::vector<DiscardedTerm> discarded_;
    mutable bool verified_ = false;
};

// Canonical representative of a single curve term (identity on special
// classes, descent plus minimization for generic ones).
CurveTerm canonical_term(const CurveTerm& t);

// Accumulates identities into a composite derivation.
class Rewriter {
public:
    explicit Rewriter(FieldPtr ctx) : ctx_(std::move(ctx)) {}

    void apply(const IdentityPtr& id, long long w = 1);
    // Picks the unique weight cancelling `target` in the running sum; throws
    // when the target is absent or the coefficients do not divide.
    void eliminate(const IdentityPtr& id, const CurveTerm& target);
    long long coeff_of(const CurveTerm& target) const;

    const CurveSum& current() const { return cur_; }
    IdentityPtr finish(std::string name, std::string params);

private:
    FieldPtr ctx_;
    CurveSum cur_;
    std::vector<Identity::Part> parts_;
};

namespace rel {

enum class Slot { Left, Middle, Right };

// Multiplicativity of a single coordinate: splitting h1*h2 in the given slot
// of a triple built from f and g, with correction terms depending on the slot.
IdentityPtr product_rule(Slot slot, const FactoredRational& h1, const FactoredRational& h2,
                         const FactoredRational& f, const FactoredRational& g);

// Transpositions of coordinates, with Z-term corrections.
IdentityPtr swap23(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h);
IdentityPtr swap12(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h);
IdentityPtr swap13(const FactoredRational& f, const FactoredRational& g,
                   const FactoredRational& h);

// Relates [f, u, v] and [1/f, u, v].
IdentityPtr reciprocal(const FactoredRational& f, const FactoredRational& u,
                       const FactoredRational& v);
// Relates [f, m, h] and [f, 1/m, h].
IdentityPtr reciprocal_mid(const FactoredRational& f, const FactoredRational& m,
                           const FactoredRational& h);
// Relates [f, g, m] and [f, g, 1/m].
IdentityPtr reciprocal_right(const FactoredRational& f, const FactoredRational& g,
                             const FactoredRational& m);

// Z(a, c) = Z(c, a).
IdentityPtr z_symmetry(const FieldElement& a, const FieldElement& c);
// [(x-a)/(x-b), c, x] = Z(c, a/b).
IdentityPtr z_shift(const FieldElement& a, const FieldElement& b, const FieldElement& c);
// [(x-a)/(x-b), x, c] = Z(c, a) - Z(c, b) - Z(c, a/b).
IdentityPtr z_split(const FieldElement& a, const FieldElement& b, const FieldElement& c);
// Z(u, v) = -Z(1/u, v) + bracket.
IdentityPtr z_inverse(const FieldElement& u, const FieldElement& v);
// [(x-a)/(x-b), x, c] = [(x-a)/(x-a/b), x, c].
IdentityPtr z_denominator_swap(const FieldElement& a, const FieldElement& b,
                               const FieldElement& c);

// n [f, g, zeta] = 0 for a root of unity zeta of order n.
IdentityPtr right_root_kill(const FactoredRational& f, const FactoredRational& g,
                            const FieldElement& zeta);
// m n Z(a, zeta) = 0 when a, zeta are roots of unity of orders m, n.
IdentityPtr z_torsion_kill(const FieldElement& a, const FieldElement& zeta);

// C_a + C_{1-a} - C_1 = Z-term (a != 0, 1).
IdentityPtr two_term(const FieldElement& a);
// n C_{a^n} = n^2 sum_j C_{zeta^j a} + bracket terms.
IdentityPtr distribution(const FieldElement& a, unsigned n);

// Five-term relation for the arguments a, b and derived variants.
IdentityPtr five_term(const FieldElement& a, const FieldElement& b);
// Variant with the Z-term rewritten through Z(b, 1-a).
IdentityPtr five_term_sym(const FieldElement& a, const FieldElement& b);
// Doubled five-term with the unit-numerator brackets reduced to Z-terms.
IdentityPtr five_term_even(const FieldElement& a, const FieldElement& b);

// Inversion: 2 (C_{a/b} + C_{b/a} - 2 C_1) = Z-terms + brackets.
IdentityPtr inversion(const FieldElement& a, const FieldElement& b);
// Doubled inversion with the unit-numerator brackets reduced to Z-terms;
// every residual term then carries a root of unity when a, b do.
IdentityPtr inversion_even(const FieldElement& a, const FieldElement& b);

// A fixed catalogue of identities over several fields, used for replay tests.
std::vector<IdentityPtr> standard_corpus();

// The canonical curve sum of c * C_a.
CurveSum totaro_sum(const FieldElement& a, long long c = 1);
// The canonical curve sum of c * Z(a, b).
CurveSum z_sum(const FieldElement& a, const FieldElement& b, long long c = 1);
// The canonical curve sum of c * [(x-a)/(x-b), x, u].
CurveSum bracket_sum(const FieldElement& a, const FieldElement& b, const FieldElement& u,
                     long long c = 1);

}  // namespace rel

}  // namespace chow
