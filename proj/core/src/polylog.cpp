#include "ccs/polylog.hpp"

#include <array>
#include <cmath>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

constexpr int kBernoulliTerms = 24;

// c[k] = B_{2k} / (2k+1)!, k >= 1.
constexpr std::array<double, kBernoulliTerms> kBernoulli = {
    0.0,
    0.027777777777777776,
    -0.0002777777777777778,
    4.72411186696901e-06,
    -9.185773074661964e-08,
    1.8978869988971e-09,
    -4.0647616451442256e-11,
    8.921691020456452e-13,
    -1.9939295860721074e-14,
    4.518980029619918e-16,
    -1.0356517612181247e-17,
    2.395218621026187e-19,
    -5.581785874325009e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.315975652702203e-26,
    -1.740845657234001e-27,
    4.1576356446139e-29,
    -9.962148488284622e-31,
    2.3940344248961652e-32,
    -5.76834735536739e-34,
    1.393179479647008e-35,
    -3.3721219654850894e-37,
    8.178208777562102e-39,
};

// Li2 via the series in u = -Log(1 - z); valid for |z| <= 1, Re z <= 1/2.
cplx li2_bernoulli(cplx z) {
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx power = u;
    for (int k = 1; k < kBernoulliTerms; ++k) {
        power *= u2;
        const cplx term = kBernoulli[k] * power;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Li2 for |z| <= 1 (up to rounding), by reflection when Re z > 1/2.
cplx li2_disc(cplx z) {
    if (z == cplx(0.0)) return 0.0;
    if (z.real() > 0.5) {
        if (z == cplx(1.0)) return kPi2 / 6.0;
        return kPi2 / 6.0 - std::log(z) * std::log(1.0 - z) - li2_bernoulli(1.0 - z);
    }
    return li2_bernoulli(z);
}

// Principal Li2 off the cut [1, inf).
cplx li2_principal(cplx z) {
    if (std::norm(z) > 1.0) {
        const cplx lg = plog(-z);
        return -li2_disc(1.0 / z) - kPi2 / 6.0 - 0.5 * lg * lg;
    }
    return li2_disc(z);
}

bool on_upper_cut(cplx z) { return z.imag() == 0.0 && z.real() > 1.0; }

}  // namespace

cplx plog(cplx z, const Tolerances& tol) {
    if (!(std::abs(z) > tol.zero)) throw Error(ErrorCode::LogOfZero, "logarithm of zero");
    if (z.imag() == 0.0 && z.real() < 0.0) return {std::log(-z.real()), kPi};
    return std::log(z);
}

cplx li2(cplx z, CutSide side) {
    if (on_upper_cut(z)) {
        if (side == CutSide::None) {
            throw Error(ErrorCode::OnCut, "Li2 argument lies on the cut (1, inf) without a side");
        }
        const double x = z.real();
        const double lx = std::log(x);
        const double re = -li2_principal(1.0 / x).real() + kPi2 / 3.0 - 0.5 * lx * lx;
        const double im = kPi * lx;
        return {re, side == CutSide::Upper ? im : -im};
    }
    return li2_principal(z);
}

cplx rogers_L(cplx z, const Tolerances& tol) {
    const cplx li = li2(z, on_upper_cut(z) ? CutSide::Upper : CutSide::None);
    return -0.5 * plog(z, tol) * plog(1.0 / (1.0 - z), tol) + li - kPi2 / 6.0;
}

double rogers_L_real(double x) {
    if (x == 1.0) return 0.0;
    if (x == 0.0) return -kPi2 / 6.0;
    if (x > 1.0) return -rogers_L_real(1.0 / x);
    if (x < 0.0) return -rogers_L_real(x / (x - 1.0));
    return rogers_L(cplx(x, 0.0)).real();
}

double vol(cplx z) {
    // Flat simplex; Arg(1 - z) of the principal branch would pick the wrong cut side.
    if (z.imag() == 0.0) return 0.0;
    return std::arg(1.0 - z) * std::log(std::abs(z)) + li2(z).imag();
}

cplx lhat(const CoveringPoint& pt, const Tolerances& tol) {
    const cplx z = pt.z();
    const cplx branch = static_cast<double>(pt.q()) * plog(z, tol) -
                        static_cast<double>(pt.p()) * plog(1.0 / (1.0 - z), tol);
    return rogers_L(z, tol) + cplx(0.0, kPi / 2.0) * branch;
}

cplx lhat(const PreBlochElement& e, const Tolerances& tol) {
    cplx sum = 0.0;
    for (const auto& t : e.terms()) sum += static_cast<double>(t.coef) * lhat(t.point, tol);
    return sum;
}

PreBlochElement chi_hat(Rational r, const Tolerances& tol) {
    if (r.den == 0) throw Error(ErrorCode::ChiAtZero, "zero denominator");
    const long num = ((r.num % r.den) + r.den) % r.den;
    if (num == 0) throw Error(ErrorCode::ChiAtZero, "chi_hat is undefined at r = 0");
    const double angle = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(r.den);
    cplx z = std::polar(1.0, angle);
    if (2 * num == r.den) z = -1.0;
    PreBlochElement e(tol);
    e.add(1, CoveringPoint(z, 0, 2, tol));
    e.add(-1, CoveringPoint(z, 0, 0, tol));
    return e;
}

cplx reduce_mod1(cplx w) { return {w.real() - std::floor(w.real()), w.imag()}; }

double distance_mod1(double a, double b) {
    const double d = a - b;
    return std::abs(d - std::round(d));
}

}  // namespace ccs
