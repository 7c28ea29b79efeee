#pragma once

#include <complex>
#include <vector>

#include "chow/cycles.hpp"

namespace chow {

// Value of the Abel-Jacobi map in C modulo the lattice 4*pi^2*Z. The stored
// representative has real part reduced into [0, 4*pi^2).
struct RegulatorValue {
    std::complex<double> value{0.0, 0.0};
    unsigned embedding_index = 1;
    double precision_estimate = 0.0;
};

// Reduces the real part into [0, 4*pi^2); idempotent.
RegulatorValue reduce_mod_lattice(RegulatorValue v);

// Principal-branch dilogarithm (cut along [1, inf)), absolute error < 1e-13.
// Truncated series on |z| <= 1/2, inversion and reflection elsewhere.
std::complex<double> li2(std::complex<double> z);

// Abel-Jacobi value of one admissible curve term at the embedding g ->
// exp(2*pi*i*k/n): quadrature of log(f2) dlog(f3) along the arc where f1 is
// real negative, plus 2*pi*i crossing terms where f2 meets the cut. The first
// coordinate must be constant (off the cut: exact 0) or fractional-linear.
// Calibrated so that aj_curve(C_a) = li2(a).
RegulatorValue aj_curve(const CurveTerm& t, unsigned k);

// Termwise-linear extension, reduced once at the end.
RegulatorValue aj_sum(const CurveSum& s, unsigned k);

// One value per embedding index coprime to the conductor.
std::vector<RegulatorValue> aj_all_embeddings(const CurveSum& s);

// Continued-fraction recognition of v as q*pi^2 modulo 4*pi^2.
struct Pi2Recognition {
    bool recognized = false;
    Rational q = 0;              // v = q*pi^2 (mod 4*pi^2) when recognized
    unsigned implied_order = 1;  // least n >= 1 with n*q in 4Z
    bool non_torsion_signal = false;  // imaginary part above tolerance
};

Pi2Recognition recognize_pi2(const RegulatorValue& v, long max_denominator = 10000,
                             double tolerance = 1e-6);

}  // namespace chow
