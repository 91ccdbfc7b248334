#pragma once

#include <complex>

#include "ccs/core_types.hpp"
#include "ccs/covering_point.hpp"
#include "ccs/pre_bloch.hpp"

namespace ccs {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPi2 = kPi * kPi;

// Side of a branch cut from which a real argument is approached.
enum class CutSide { None, Upper, Lower };

// Principal logarithm, Arg in (-pi, pi]. Negative reals get +i*pi regardless of the
// sign of a zero imaginary part.
cplx plog(cplx z, const Tolerances& tol = kDefaultTol);

// Principal branch of Li2, cut along [1, inf). A real argument greater than one needs
// a side; without one this throws OnCut.
cplx li2(cplx z, CutSide side = CutSide::None);

// -1/2 Log(z) Log(1/(1-z)) + Li2(z) - pi^2/6, principal branches. Real z > 1 is
// evaluated from the upper side.
cplx rogers_L(cplx z, const Tolerances& tol = kDefaultTol);

// The discontinuous real extension: L(0) = -pi^2/6, L(1) = 0, L(x) = -L(1/x) for x > 1
// and L(x) = -L(x/(x-1)) for x < 0.
double rogers_L_real(double x);

// Oriented volume of the ideal simplex with cross-ratio z (Bloch-Wigner function).
double vol(cplx z);

// Extended dilogarithm L(z) + (pi i/2)(q Log z - p Log(1/(1-z))).
cplx lhat(const CoveringPoint& pt, const Tolerances& tol = kDefaultTol);

// Sum of coef * lhat over the terms; no reduction.
cplx lhat(const PreBlochElement& e, const Tolerances& tol = kDefaultTol);

struct Rational {
    long num;
    long den;
};

// [e^{2 pi i r}; 0, 2] - [e^{2 pi i r}; 0, 0]. Throws ChiAtZero for r = 0 (mod 1).
PreBlochElement chi_hat(Rational r, const Tolerances& tol = kDefaultTol);

// -lhat / (2 pi^2), the normalisation under which lhat lands in C/Z.
inline cplx scale_to_unit(cplx lhat_value) { return -lhat_value / (2.0 * kPi2); }

// Real part reduced into [0, 1); imaginary part untouched.
cplx reduce_mod1(cplx w);

// Distance from w to the nearest integer, measured on the real part.
double distance_mod1(double a, double b);

}  // namespace ccs
