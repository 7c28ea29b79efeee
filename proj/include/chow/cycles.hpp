#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chow/ratfunc.hpp"

namespace chow {

enum class TermClass { Zero, Degenerate, ZPrime, Generic };

std::string term_class_name(TermClass c);

// Curve in the 3-cube parametrized by x: (f1(x), f2(x), f3(x)).
class CurveTerm {
public:
    CurveTerm(FactoredRational f1, FactoredRational f2, FactoredRational f3);

    const FieldPtr& context() const { return coords_[0].context(); }
    const FactoredRational& coord(int i) const { return coords_.at(i); }
    const std::array<FactoredRational, 3>& coords() const { return coords_; }

    TermClass classify() const;

    bool operator==(const CurveTerm& o) const { return coords_ == o.coords_; }
    std::strong_ordering operator<=>(const CurveTerm& o) const { return coords_ <=> o.coords_; }

    std::string str() const;

private:
    std::array<FactoredRational, 3> coords_;
};

// Point in the 2-cube: (a, b), both nonzero constants.
class PointTerm {
public:
    PointTerm(FieldElement a, FieldElement b);

    const FieldPtr& context() const { return a_.context(); }
    const FieldElement& first() const { return a_; }
    const FieldElement& second() const { return b_; }

    bool is_degenerate() const;  // some coordinate equal to 1

    bool operator==(const PointTerm& o) const = default;
    std::strong_ordering operator<=>(const PointTerm& o) const;

    std::string str() const;

private:
    FieldElement a_, b_;
};

// Surface in the 4-cube over P1 x P1 with coordinates (x, z); at most one
// coordinate may genuinely mix x and z.
class SurfaceTerm {
public:
    SurfaceTerm(SurfaceCoordinate c1, SurfaceCoordinate c2, SurfaceCoordinate c3,
                SurfaceCoordinate c4);

    const FieldPtr& context() const { return coords_[0].context(); }
    const SurfaceCoordinate& coord(int i) const { return coords_.at(i); }
    const std::array<SurfaceCoordinate, 4>& coords() const { return coords_; }

    bool operator==(const SurfaceTerm& o) const { return coords_ == o.coords_; }
    std::strong_ordering operator<=>(const SurfaceTerm& o) const { return coords_ <=> o.coords_; }

    std::string str() const;

private:
    std::array<SurfaceCoordinate, 4> coords_;
};

template <class T>
class FormalSum {
public:
    using map_type = std::map<T, long long>;

    FormalSum() = default;

    void add(const T& t, long long c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const FormalSum& other, long long scale = 1) {
        if (scale == 0) return;
        for (const auto& [t, c] : other.terms_) add(t, c * scale);
    }
    FormalSum& operator+=(const FormalSum& o) { add(o); return *this; }
    FormalSum& operator-=(const FormalSum& o) { add(o, -1); return *this; }
    FormalSum operator+(const FormalSum& o) const { FormalSum r = *this; r += o; return r; }
    FormalSum operator-(const FormalSum& o) const { FormalSum r = *this; r -= o; return r; }
    FormalSum operator*(long long s) const {
        FormalSum r;
        r.add(*this, s);
        return r;
    }
    FormalSum operator-() const { return *this * -1; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    long long coeff(const T& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? 0 : it->second;
    }
    const map_type& terms() const { return terms_; }

    bool operator==(const FormalSum& o) const = default;

private:
    map_type terms_;
};

using CurveSum = FormalSum<CurveTerm>;
using PointSum = FormalSum<PointTerm>;
using SurfaceSum = FormalSum<SurfaceTerm>;

struct AdmissibilityReport {
    bool admissible = true;
    std::string witness;  // empty when admissible
};

// A curve is admissible when no boundary point of the ambient cube meets the
// cycle in excess dimension; failure pinpoints an offending face and point.
AdmissibilityReport admissible_curve(const CurveTerm& t);

// Cubical boundary of a curve: signed points from zeros/poles of each
// coordinate, skipping points where another coordinate passes through 1.
PointSum boundary_curve(const CurveTerm& t);

// Cubical boundary of a surface: signed curves on divisor components of each
// coordinate. Throws inadmissible_error when a face restriction hits 0 or
// infinity without a compensating coordinate equal to 1.
CurveSum boundary_surface(const SurfaceTerm& t);
CurveSum boundary_surface_sum(const SurfaceSum& s);

// Pull back along x -> x^n when every coordinate is such a pullback;
// runs the largest possible chain of such steps. Returns the reduced term
// and the accumulated multiplier (product of the n used).
struct DescendResult {
    CurveTerm term;
    long long multiplier = 1;
};
DescendResult descend_maximal(const CurveTerm& t);
std::optional<CurveTerm> descend_once(const CurveTerm& t, unsigned long n);

// Reparametrize all three coordinates by a Moebius transformation.
CurveTerm reparam_curve(const CurveTerm& t, const Mobius& m);

// PGL2-minimal representative of a generic curve together with the descent
// multiplier picked up along the way.
struct CanonicalForm {
    CurveTerm term;
    long long multiplier = 1;
};
CanonicalForm canonical_form(const CurveTerm& t);

// Insert with canonicalization: generic terms are descended and minimized,
// special-class terms are kept verbatim.
void add_canonical(CurveSum& sum, const CurveTerm& t, long long c);
CurveSum canonicalize_sum(const CurveSum& s);

struct DiscardedTerm {
    CurveTerm term;
    long long coeff;
    TermClass cls;
};

// Projection to the quotient modulo degenerate terms and the acyclic
// subcomplex of curves with constant non-unit first coordinate.
struct NormalizedSum {
    CurveSum kept;
    std::vector<DiscardedTerm> discarded;
};
NormalizedSum normalize_quotient(const CurveSum& s);

struct ClosednessReport {
    bool closed = true;
    std::string witness;
};

// A point sum bounds a sum of graphs in the 2-cube iff for every first
// coordinate the product of second coordinates (with multiplicity) is 1.
ClosednessReport closedness_check(const PointSum& s);

// C_a = (1 - a/x, 1 - x, x).
CurveTerm totaro_curve(const FieldElement& a);
// Z(a, c) = ((x - a)/(x - 1), c, x).
CurveTerm z_curve(const FieldElement& a, const FieldElement& c);

std::string sum_str(const CurveSum& s);
std::string sum_str(const PointSum& s);
std::string sum_str(const SurfaceSum& s);

}  // namespace chow
