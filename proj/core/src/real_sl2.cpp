#include "ccs/real_sl2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccs/ccs_pipeline.hpp"
#include "ccs/errors.hpp"
#include "ccs/polylog.hpp"
#include "ccs/seeding.hpp"

namespace ccs {

RealGroupElement::RealGroupElement(double a, double b, double c, double d, const Tolerances& tol)
    : a_(a), b_(b), c_(c), d_(d) {
    const double det = a * d - b * c;
    if (!(std::abs(det - 1.0) <= tol.det)) {
        throw Error(ErrorCode::DeterminantError, "ad - bc = " + std::to_string(det));
    }
}

RealGroupElement RealGroupElement::from_complex(const GroupElement& g, const Tolerances& tol) {
    for (const cplx x : g.entries()) {
        if (std::abs(x.imag()) > tol.zero) throw Error(ErrorCode::DeterminantError, "element is not real");
    }
    return RealGroupElement(g.a().real(), g.b().real(), g.c().real(), g.d().real(), tol);
}

RealGroupElement RealGroupElement::inverse() const {
    RealGroupElement r;
    r.a_ = d_;
    r.b_ = -b_;
    r.c_ = -c_;
    r.d_ = a_;
    return r;
}

RealGroupElement operator*(const RealGroupElement& g, const RealGroupElement& h) {
    RealGroupElement r;
    r.a_ = g.a_ * h.a_ + g.b_ * h.c_;
    r.b_ = g.a_ * h.b_ + g.b_ * h.d_;
    r.c_ = g.c_ * h.a_ + g.d_ * h.c_;
    r.d_ = g.c_ * h.b_ + g.d_ * h.d_;
    return r;
}

bool is_positive(const RealGroupElement& g, const Tolerances& tol) { return g.c() > tol.zero; }

bool is_nonzero(const RealGroupElement& g, const Tolerances& tol) { return std::abs(g.c()) > tol.zero; }

bool less(const RealGroupElement& g1, const RealGroupElement& g2, const Tolerances& tol) {
    const RealGroupElement q = g1.inverse() * g2;
    if (!is_nonzero(q, tol)) throw Error(ErrorCode::Incomparable, "g1^-1 g2 has c = 0");
    return is_positive(q, tol);
}

std::vector<std::size_t> sort_tuple(const std::vector<RealGroupElement>& g, const Tolerances& tol) {
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t pass = 0; pass + 1 < perm.size(); ++pass) {
        bool swapped = false;
        for (std::size_t i = 0; i + 1 < perm.size() - pass; ++i) {
            if (less(g[perm[i + 1]], g[perm[i]], tol)) {
                std::swap(perm[i], perm[i + 1]);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (!less(g[perm[i]], g[perm[j]], tol)) {
                throw Error(ErrorCode::NotSortable, "order is not transitive on this tuple");
            }
        }
    }
    return perm;
}

namespace {

ExtComplex at_infinity(const RealGroupElement& g) {
    if (g.c() == 0.0) return ExtComplex::infinity();
    return ExtComplex(g.a() / g.c());
}

}  // namespace

double rogers_cocycle(const RealGroupElement& g0, const RealGroupElement& g1, const RealGroupElement& g2,
                      const RealGroupElement& g3, const Tolerances& tol) {
    const cplx cr = cross_ratio_ext(at_infinity(g0), at_infinity(g1), at_infinity(g2), at_infinity(g3), tol);
    return rogers_L_real(cr.real());
}

SmallPositiveReport check_small_positive_agreement(const RealGroupElement& g1, const RealGroupElement& g2,
                                                   const RealGroupElement& g3, const Tolerances& tol) {
    const auto fail = [](const std::string& what) { throw Error(ErrorCode::PreconditionFailed, what); };
    if (!is_positive(g1, tol)) fail("g1 is not positive");
    if (!is_positive(g2, tol)) fail("g2 is not positive");
    if (!is_positive(g3, tol)) fail("g3 is not positive");

    const std::array<RealGroupElement, 4> g = {RealGroupElement(), g1, g1 * g2, g1 * g2 * g3};
    std::vector<ProjVector> v;
    for (const auto& h : g) v.emplace_back(h.a(), h.c(), tol);

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!(std::abs(det_pair(v[i], v[j])) > tol.vgood * v[i].norm() * v[j].norm())) {
                fail("distinct vectors: v" + std::to_string(i) + " and v" + std::to_string(j) + " coincide");
            }
        }
    }
    // g0 = 1 sits at infinity; the others must be finite and strictly decreasing.
    for (std::size_t i = 1; i < 4; ++i) {
        if (!(g[i].c() > tol.zero)) fail("ordering: g" + std::to_string(i) + " inf is not below inf");
    }
    for (std::size_t i = 1; i + 1 < 4; ++i) {
        if (!(g[i].a() / g[i].c() > g[i + 1].a() / g[i + 1].c())) {
            fail("ordering: boundary points " + std::to_string(i) + " and " + std::to_string(i + 1) + " out of order");
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!(det_pair(v[i], v[j]).real() > 0.0)) {
                fail("det positivity: det(v" + std::to_string(i) + ", v" + std::to_string(j) + ") <= 0");
            }
        }
    }

    const FlatteningTriple t = sigma_hat(ConfigTuple(v, tol), position_atom, tol);
    const CoveringPoint pt = to_covering_point(t, tol);
    SmallPositiveReport r;
    r.z = pt.z().real();
    r.p = pt.p();
    r.q = pt.q();
    r.lhat_value = lhat(pt, tol).real();
    r.rogers_value = rogers_L_real(r.z);
    r.agreement = std::abs(lhat(pt, tol) - cplx(r.rogers_value, 0.0));
    return r;
}

RealGroupElement sample_small_positive(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> near(-0.2, 0.2);
    std::uniform_real_distribution<double> lower(0.0, 0.2);
    while (true) {
        const double a = 1.0 + near(rng);
        const double b = near(rng);
        const double c = lower(rng);
        if (c <= 0.0) continue;
        const double d = (1.0 + b * c) / a;
        if (std::abs(d - 1.0) > 0.2) continue;
        return RealGroupElement(a, b, c, d);
    }
}

SmallTriple sample_small_positive_triple(std::mt19937_64& rng, const Tolerances& tol) {
    SmallTriple t;
    while (true) {
        t.g1 = sample_small_positive(rng);
        t.g2 = sample_small_positive(rng);
        t.g3 = sample_small_positive(rng);
        if (is_positive(t.g1 * t.g2, tol) && is_positive(t.g2 * t.g3, tol) && is_positive(t.g1 * t.g2 * t.g3, tol)) {
            return t;
        }
        ++t.rejected;
    }
}

RealCheckSummary run_real_check(int samples, std::uint64_t seed, const Tolerances& tol) {
    RealCheckSummary s;
    std::uint64_t state = seed;
    std::mt19937_64 rng(splitmix64(state));
    for (int k = 0; k < samples; ++k) {
        const SmallTriple t = sample_small_positive_triple(rng, tol);
        s.rejected += t.rejected;
        ++s.samples;
        try {
            const SmallPositiveReport r = check_small_positive_agreement(t.g1, t.g2, t.g3, tol);
            s.max_agreement = std::max(s.max_agreement, r.agreement);
            if (r.zero_branches() && r.z_in_unit_interval() && r.agreement <= tol.cmp) {
                ++s.passed;
            } else {
                s.failures.push_back("sample " + std::to_string(k) + ": z = " + std::to_string(r.z) + ", p = " +
                                     std::to_string(r.p) + ", q = " + std::to_string(r.q));
            }
        } catch (const Error& e) {
            s.failures.push_back("sample " + std::to_string(k) + ": " + e.what());
        }
    }
    return s;
}

}  // namespace ccs
