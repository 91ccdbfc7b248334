#include "ccs/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ccs/errors.hpp"

namespace ccs {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DeterminantError: return "DeterminantError";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DegenerateTuple: return "DegenerateTuple";
        case ErrorCode::LogOfZero: return "LogOfZero";
        case ErrorCode::OnCut: return "OnCut";
        case ErrorCode::ChiAtZero: return "ChiAtZero";
        case ErrorCode::NotEven: return "NotEven";
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::DegenerateFT: return "DegenerateFT";
        case ErrorCode::DegenerateConfig: return "DegenerateConfig";
        case ErrorCode::DegreeError: return "DegreeError";
        case ErrorCode::SamplingExhausted: return "SamplingExhausted";
        case ErrorCode::RepairFailed: return "RepairFailed";
        case ErrorCode::NotVGood: return "NotVGood";
        case ErrorCode::NotCycle: return "NotCycle";
        case ErrorCode::NuNonzero: return "NuNonzero";
        case ErrorCode::Incomparable: return "Incomparable";
        case ErrorCode::NotSortable: return "NotSortable";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::PathDegenerate: return "PathDegenerate";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

GroupElement::GroupElement(cplx a, cplx b, cplx c, cplx d, const Tolerances& tol)
    : a_(a), b_(b), c_(c), d_(d) {
    const double err = std::abs(det() - 1.0);
    if (!(err <= tol.det)) {
        throw Error(ErrorCode::DeterminantError,
                    "|ad - bc - 1| = " + std::to_string(err) + " exceeds tolerance");
    }
}

GroupElement GroupElement::unchecked(cplx a, cplx b, cplx c, cplx d) {
    GroupElement g;
    g.a_ = a;
    g.b_ = b;
    g.c_ = c;
    g.d_ = d;
    return g;
}

GroupElement GroupElement::conj() const {
    return unchecked(std::conj(a_), std::conj(b_), std::conj(c_), std::conj(d_));
}

double GroupElement::max_abs() const {
    return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return GroupElement::unchecked(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                                   g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

ProjVector GroupElement::operator*(const ProjVector& v) const {
    return ProjVector(a_ * v.v1() + b_ * v.v2(), c_ * v.v1() + d_ * v.v2());
}

bool GroupElement::approx_equal(const GroupElement& h, double tol) const {
    const double scale = std::max({1.0, max_abs(), h.max_abs()});
    const auto e = entries();
    const auto f = h.entries();
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(e[i] - f[i]) > tol * scale) return false;
    }
    return true;
}

bool GroupElement::approx_equal_up_to_sign(const GroupElement& h, double tol) const {
    return approx_equal(h, tol) || approx_equal(-h, tol);
}

ProjVector::ProjVector(cplx v1, cplx v2, const Tolerances& tol) : v1_(v1), v2_(v2) {
    if (!(std::max(std::abs(v1), std::abs(v2)) > tol.zero)) {
        throw Error(ErrorCode::ZeroVector, "projective vector must be nonzero");
    }
}

double ProjVector::norm() const { return std::sqrt(std::norm(v1_) + std::norm(v2_)); }

cplx ExtComplex::value() const {
    if (!value_) throw Error(ErrorCode::InvalidPoint, "the point at infinity has no finite value");
    return *value_;
}

bool approx_equal(const ExtComplex& z, const ExtComplex& w, double tol) {
    if (z.is_infinite() || w.is_infinite()) return z.is_infinite() && w.is_infinite();
    const double scale = std::max({1.0, std::abs(z.value()), std::abs(w.value())});
    return std::abs(z.value() - w.value()) <= tol * scale;
}

cplx det_pair(const ProjVector& v, const ProjVector& w) { return v.v1() * w.v2() - v.v2() * w.v1(); }

ExtComplex hopf(const ProjVector& v, const Tolerances& tol) {
    if (std::abs(v.v2()) > tol.zero) return ExtComplex(v.v1() / v.v2());
    return ExtComplex::infinity();
}

ExtComplex moebius(const GroupElement& g, const ExtComplex& z, const Tolerances& tol) {
    if (z.is_infinite()) {
        if (std::abs(g.c()) <= tol.zero) return ExtComplex::infinity();
        return ExtComplex(g.a() / g.c());
    }
    const cplx den = g.c() * z.value() + g.d();
    if (std::abs(den) <= tol.zero) return ExtComplex::infinity();
    return ExtComplex((g.a() * z.value() + g.b()) / den);
}

namespace {

// z - w with the point at infinity cancelled against its partner factor.
cplx factor(const ExtComplex& z, const ExtComplex& w) {
    if (z.is_infinite() || w.is_infinite()) return 1.0;
    return z.value() - w.value();
}

bool has_repeat(const std::array<ExtComplex, 4>& z, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (approx_equal(z[i], z[j], tol)) return true;
        }
    }
    return false;
}

}  // namespace

cplx cross_ratio(const ExtComplex& z0, const ExtComplex& z1, const ExtComplex& z2,
                 const ExtComplex& z3, const Tolerances& tol) {
    if (has_repeat({z0, z1, z2, z3}, tol.cmp)) {
        throw Error(ErrorCode::DegenerateTuple, "cross-ratio of a tuple with repeated points");
    }
    return factor(z0, z3) * factor(z1, z2) / (factor(z0, z2) * factor(z1, z3));
}

cplx cross_ratio_ext(const ExtComplex& z0, const ExtComplex& z1, const ExtComplex& z2,
                     const ExtComplex& z3, const Tolerances& tol) {
    if (has_repeat({z0, z1, z2, z3}, tol.cmp)) return 0.0;
    return cross_ratio(z0, z1, z2, z3, tol);
}

GroupElement rotation(int n, long k) {
    if (n < 1) throw Error(ErrorCode::DegreeError, "rotation order must be positive");
    const long r = ((k % n) + n) % n;
    double cs = 0.0;
    double sn = 0.0;
    if ((4 * r) % n == 0) {
        static constexpr double kCos[] = {1.0, 0.0, -1.0, 0.0};
        static constexpr double kSin[] = {0.0, 1.0, 0.0, -1.0};
        const long quarter = 4 * r / n;
        cs = kCos[quarter];
        sn = kSin[quarter];
    } else {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
        cs = std::cos(theta);
        sn = std::sin(theta);
    }
    return GroupElement::unchecked(cs, -sn, sn, cs);
}

}  // namespace ccs
