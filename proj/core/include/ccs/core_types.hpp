#pragma once

#include <array>
#include <complex>
#include <optional>

#include "ccs/tolerances.hpp"

namespace ccs {

using cplx = std::complex<double>;

class ProjVector;

// An element of SL(2,C), stored as the matrix ((a, b), (c, d)).
// The determinant is checked at construction and never renormalized.
class GroupElement {
public:
    GroupElement() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
    GroupElement(cplx a, cplx b, cplx c, cplx d, const Tolerances& tol = kDefaultTol);

    // Skips the determinant check. For products and inverses of validated elements.
    static GroupElement unchecked(cplx a, cplx b, cplx c, cplx d);
    static GroupElement identity() { return {}; }

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }
    std::array<cplx, 4> entries() const { return {a_, b_, c_, d_}; }

    cplx det() const { return a_ * d_ - b_ * c_; }
    GroupElement inverse() const { return unchecked(d_, -b_, -c_, a_); }
    GroupElement operator-() const { return unchecked(-a_, -b_, -c_, -d_); }
    GroupElement conj() const;
    double max_abs() const;

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    ProjVector operator*(const ProjVector& v) const;

    bool approx_equal(const GroupElement& h, double tol) const;
    // g = h or g = -h, elementwise within tol.
    bool approx_equal_up_to_sign(const GroupElement& h, double tol) const;

private:
    cplx a_, b_, c_, d_;
};

// A nonzero vector of C^2.
class ProjVector {
public:
    ProjVector(cplx v1, cplx v2, const Tolerances& tol = kDefaultTol);

    cplx v1() const { return v1_; }
    cplx v2() const { return v2_; }
    double norm() const;
    ProjVector scaled(cplx s) const { return ProjVector(s * v1_, s * v2_); }

private:
    cplx v1_, v2_;
};

// A point of the Riemann sphere C u {inf}.
class ExtComplex {
public:
    ExtComplex(cplx z) : value_(z) {}  // NOLINT: finite points convert implicitly
    ExtComplex(double x) : value_(cplx(x, 0.0)) {}  // NOLINT
    static ExtComplex infinity() { return ExtComplex(); }

    bool is_infinite() const { return !value_.has_value(); }
    cplx value() const;

    friend bool operator==(const ExtComplex&, const ExtComplex&) = default;

private:
    ExtComplex() = default;
    std::optional<cplx> value_;
};

bool approx_equal(const ExtComplex& z, const ExtComplex& w, double tol);

cplx det_pair(const ProjVector& v, const ProjVector& w);

// (v1, v2) -> v1 / v2.
ExtComplex hopf(const ProjVector& v, const Tolerances& tol = kDefaultTol);

ExtComplex moebius(const GroupElement& g, const ExtComplex& z, const Tolerances& tol = kDefaultTol);

// (z0 - z3)(z1 - z2) / ((z0 - z2)(z1 - z3)); factors containing inf cancel symbolically.
// Throws DegenerateTuple when two arguments coincide.
cplx cross_ratio(const ExtComplex& z0, const ExtComplex& z1, const ExtComplex& z2,
                 const ExtComplex& z3, const Tolerances& tol = kDefaultTol);

// As cross_ratio, but 0 whenever two arguments coincide.
cplx cross_ratio_ext(const ExtComplex& z0, const ExtComplex& z1, const ExtComplex& z2,
                     const ExtComplex& z3, const Tolerances& tol = kDefaultTol);

// Rotation by 2*pi*k/n. Quarter turns are exact.
GroupElement rotation(int n, long k);

}  // namespace ccs
