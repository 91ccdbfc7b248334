#include "ccs/extended_bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

bool is_even(long n) { return n % 2 == 0; }

bool same_point(const CoveringPoint& a, const CoveringPoint& b, double tol) {
    return a.p() == b.p() && a.q() == b.q() &&
           std::abs(a.z() - b.z()) <= tol * std::max(1.0, std::abs(a.z()));
}

void check_flattening(cplx w0, cplx w1, const Tolerances& tol) {
    const cplx z = std::exp(w0);
    if (!(std::abs(z) > tol.zero) || !(std::abs(1.0 - z) > tol.zero)) {
        throw Error(ErrorCode::InvalidPoint, "flattening over a cross-ratio in {0, 1}");
    }
    const cplx zp = 1.0 / (1.0 - z);
    if (std::abs(std::exp(w1) - zp) > tol.cmp * std::abs(zp)) {
        throw Error(ErrorCode::InvalidPoint, "w1 is not a logarithm of 1/(1 - exp(w0))");
    }
}

long nearest_branch(cplx diff, const char* which) {
    const cplx k = diff / cplx(0.0, kPi);
    const double r = std::round(k.real());
    if (std::abs(k - r) > 1e-6) {
        throw Error(ErrorCode::NotEven, std::string(which) + " is not an integer multiple of pi*i");
    }
    const long n = static_cast<long>(r);
    if (!is_even(n)) throw Error(ErrorCode::NotEven, std::string(which) + " branch is odd");
    return n;
}

}  // namespace

CoveringPoint::CoveringPoint(cplx z, long p, long q, const Tolerances& tol) : z_(z), p_(p), q_(q) {
    if (!(std::abs(z) > tol.zero) || !(std::abs(1.0 - z) > tol.zero)) {
        throw Error(ErrorCode::InvalidPoint, "covering point over 0 or 1");
    }
    if (!is_even(p) || !is_even(q)) throw Error(ErrorCode::NotEven, "branch integers must be even");
}

void PreBlochElement::add(long coef, const CoveringPoint& pt) {
    if (coef == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (same_point(it->point, pt, tol_.cmp)) {
            it->coef += coef;
            if (it->coef == 0) terms_.erase(it);
            return;
        }
    }
    terms_.push_back({coef, pt});
}

PreBlochElement& PreBlochElement::operator+=(const PreBlochElement& other) {
    for (const auto& t : other.terms_) add(t.coef, t.point);
    return *this;
}

PreBlochElement PreBlochElement::operator-() const {
    PreBlochElement e(tol_);
    for (const auto& t : terms_) e.terms_.push_back({-t.coef, t.point});
    return e;
}

FlatteningTriple::FlatteningTriple(cplx w0, cplx w1, const Tolerances& tol) : w_{w0, w1, -w0 - w1} {
    check_flattening(w0, w1, tol);
}

FlatteningTriple::FlatteningTriple(const LogExpr& w0, const LogExpr& w1, const Tolerances& tol)
    : w_{w0.value(), w1.value(), -w0.value() - w1.value()},
      ledger_(std::array<LogExpr, 3>{w0, w1, -(w0 + w1)}) {
    check_flattening(w_[0], w_[1], tol);
}

CoveringPoint to_covering_point(const FlatteningTriple& t, const Tolerances& tol) {
    const cplx z = t.z();
    const long p = nearest_branch(t.w0() - plog(z, tol), "w0");
    const long q = nearest_branch(t.w1() - plog(1.0 / (1.0 - z), tol), "w1");
    return CoveringPoint(z, p, q, tol);
}

FlatteningTriple from_covering_point(const CoveringPoint& pt, const Tolerances& tol) {
    const cplx z = pt.z();
    const cplx w0 = plog(z, tol) + cplx(0.0, kPi * static_cast<double>(pt.p()));
    const cplx w1 = plog(1.0 / (1.0 - z), tol) + cplx(0.0, kPi * static_cast<double>(pt.q()));
    return FlatteningTriple(w0, w1, tol);
}

std::array<cplx, 5> five_tuple(cplx x, cplx y, const Tolerances& tol) {
    const auto bad = [&](cplx v) { return !(std::abs(v) > tol.zero) || !(std::abs(1.0 - v) > tol.zero); };
    if (bad(x)) throw Error(ErrorCode::DegenerateFT, "x0 = x lies in {0, 1}");
    if (bad(y)) throw Error(ErrorCode::DegenerateFT, "x1 = y lies in {0, 1}");
    if (!(std::abs(x - y) > tol.zero)) throw Error(ErrorCode::DegenerateFT, "x2 = y/x equals 1 (x = y)");
    const std::array<cplx, 5> out = {x, y, y / x, (1.0 - 1.0 / x) / (1.0 - 1.0 / y), (1.0 - x) / (1.0 - y)};
    for (std::size_t i = 2; i < 5; ++i) {
        if (bad(out[i])) {
            throw Error(ErrorCode::DegenerateFT, "coordinate x" + std::to_string(i) + " lies in {0, 1}");
        }
    }
    return out;
}

namespace {

struct EdgeTerm {
    int sign;
    int w;        // which log-parameter
    int simplex;  // which face
};

// Signed sum over each edge [z_a z_b] of the three log-parameters assigned to it; the
// sign is + exactly for faces with even index.
constexpr std::array<std::array<EdgeTerm, 3>, 10> kEdges = {{
    {{{+1, 0, 2}, {-1, 0, 3}, {+1, 0, 4}}},  // z0z1
    {{{+1, 0, 0}, {-1, 1, 3}, {+1, 1, 4}}},  // z1z2
    {{{+1, 1, 0}, {-1, 1, 1}, {+1, 0, 4}}},  // z2z3
    {{{+1, 0, 0}, {-1, 0, 1}, {+1, 0, 2}}},  // z3z4
    {{{-1, 1, 1}, {+1, 1, 2}, {-1, 1, 3}}},  // z4z0
    {{{-1, 0, 1}, {-1, 2, 3}, {+1, 2, 4}}},  // z0z2
    {{{+1, 2, 0}, {+1, 1, 2}, {+1, 2, 4}}},  // z1z3
    {{{+1, 2, 0}, {-1, 2, 1}, {-1, 0, 3}}},  // z2z4
    {{{-1, 2, 1}, {+1, 2, 2}, {+1, 1, 4}}},  // z3z0
    {{{+1, 1, 0}, {+1, 2, 2}, {-1, 2, 3}}},  // z4z1
}};

}  // namespace

FlatteningReport check_flattening_condition(std::span<const FlatteningTriple, 5> triples,
                                            const Tolerances& tol) {
    FlatteningReport report;
    const bool ledgers = std::all_of(triples.begin(), triples.end(),
                                     [](const FlatteningTriple& t) { return t.has_ledger(); });
    bool symbolic = true;
    for (std::size_t e = 0; e < kEdges.size(); ++e) {
        cplx sum = 0.0;
        LogExpr sym;
        for (const auto& term : kEdges[e]) {
            const auto& t = triples[static_cast<std::size_t>(term.simplex)];
            const auto w = static_cast<std::size_t>(term.w);
            sum += static_cast<double>(term.sign) * t.w(w);
            if (ledgers) sym += static_cast<long>(term.sign) * t.ledger()[w];
        }
        report.residuals[e] = std::abs(sum);
        report.max_residual = std::max(report.max_residual, report.residuals[e]);
        if (ledgers && !sym.is_symbolic_zero()) symbolic = false;
    }
    report.holds = report.max_residual <= tol.flat;
    if (ledgers) report.symbolic_zero = symbolic;
    return report;
}

WedgeElement nu_hat(std::span<const LedgerTerm> terms) {
    WedgeElement out;
    for (const auto& t : terms) {
        if (!t.triple.has_ledger()) {
            throw Error(ErrorCode::InvalidPoint, "exact nu_hat needs ledger-backed flattenings");
        }
        WedgeElement w = WedgeElement::wedge(t.triple.ledger()[0], t.triple.ledger()[1]);
        w *= t.coef;
        out += w;
    }
    return out;
}

NumericWedge nu_hat(const PreBlochElement& e, const Tolerances& tol) {
    NumericWedge out;
    for (const auto& t : e.terms()) {
        const cplx z = t.point.z();
        const cplx a = plog(z, tol) + cplx(0.0, kPi * static_cast<double>(t.point.p()));
        const cplx b = -plog(1.0 - z, tol) + cplx(0.0, kPi * static_cast<double>(t.point.q()));
        out.add(t.coef, a, b);
    }
    return out;
}

LogExpr position_atom(std::size_t i, std::size_t j, cplx log_det) {
    return LogExpr::atom(Atom::pair(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)), log_det);
}

WedgeElement mu(const ProjVector& v0, const ProjVector& v1, const ProjVector& v2, const LogDetLabeler& label,
                const Tolerances& tol) {
    const std::array<ProjVector, 3> v = {v0, v1, v2};
    std::array<LogExpr, 3> atoms;  // (01), (02), (12)
    constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto [i, j] = kPairs[k];
        const cplx d = det_pair(v[i], v[j]);
        if (!(std::abs(d) > tol.zero * v[i].norm() * v[j].norm())) {
            throw Error(ErrorCode::DegenerateConfig, "det(v" + std::to_string(i) + ", v" + std::to_string(j) + ") = 0");
        }
        atoms[k] = label(i, j, plog(d, tol));
    }
    WedgeElement out = WedgeElement::wedge(atoms[0], atoms[1]);
    out -= WedgeElement::wedge(atoms[0], atoms[2]);
    out += WedgeElement::wedge(atoms[1], atoms[2]);
    return out;
}

}  // namespace ccs
