#include "ccs/ccs_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ccs/errors.hpp"
#include "ccs/polylog.hpp"
#include "ccs/seeding.hpp"

namespace ccs {

namespace {

bool transverse(const ProjVector& a, const ProjVector& b, double tol) {
    return std::abs(det_pair(a, b)) > tol * a.norm() * b.norm();
}

}  // namespace

ConfigTuple::ConfigTuple(std::vector<ProjVector> v, const Tolerances& tol) : v_(std::move(v)) {
    if (v_.size() > 5) throw Error(ErrorCode::DegreeError, "configuration tuples have at most five vectors");
    for (std::size_t i = 0; i < v_.size(); ++i) {
        for (std::size_t j = i + 1; j < v_.size(); ++j) {
            if (!transverse(v_[i], v_[j], tol.vgood)) {
                throw Error(ErrorCode::DegenerateConfig,
                            "v" + std::to_string(i) + " and v" + std::to_string(j) + " have the same Hopf image");
            }
        }
    }
}

std::vector<ConfigTerm> psi_v(const HomChain& c, const ProjVector& v, const Tolerances& tol) {
    const GoodnessReport good = is_v_good(c, v, tol);
    if (!good.good) {
        const auto& o = good.offending.front();
        throw Error(ErrorCode::NotVGood, "term " + std::to_string(o.term) + ", pair (" + std::to_string(o.i) + ", " +
                                             std::to_string(o.j) + ")");
    }
    std::vector<ConfigTerm> out;
    out.reserve(c.terms().size());
    for (const auto& t : c.terms()) {
        std::vector<ProjVector> vs;
        vs.reserve(t.tuple.size());
        for (const auto& g : t.tuple) vs.push_back(g * v);
        out.push_back({t.coef, ConfigTuple(std::move(vs), tol)});
    }
    return out;
}

FlatteningTriple sigma_hat(const ConfigTuple& t, const LogDetLabeler& label, const Tolerances& tol) {
    if (t.size() != 4) throw Error(ErrorCode::DegenerateConfig, "sigma_hat needs four vectors");
    std::array<std::array<LogExpr, 4>, 4> a;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const cplx d = det_pair(t[i], t[j]);
            if (!(std::abs(d) > tol.zero * t[i].norm() * t[j].norm())) {
                throw Error(ErrorCode::DegenerateConfig,
                            "det(v" + std::to_string(i) + ", v" + std::to_string(j) + ") = 0");
            }
            a[i][j] = label(i, j, plog(d, tol));
        }
    }
    const LogExpr w0 = a[0][3] + a[1][2] - a[0][2] - a[1][3];
    const LogExpr w1 = a[0][2] + a[1][3] - a[0][1] - a[2][3];
    return FlatteningTriple(w0, w1, tol);
}

std::array<FlatteningTriple, 5> sigma_hat_faces(const std::array<ProjVector, 5>& v, const Tolerances& tol) {
    const auto face = [&](std::size_t omit) {
        std::vector<ProjVector> vs;
        std::array<std::size_t, 4> index{};
        for (std::size_t k = 0, m = 0; k < 5; ++k) {
            if (k == omit) continue;
            index[m++] = k;
            vs.push_back(v[k]);
        }
        const LogDetLabeler global = [index](std::size_t i, std::size_t j, cplx log_det) {
            return position_atom(index[i], index[j], log_det);
        };
        return sigma_hat(ConfigTuple(std::move(vs), tol), global, tol);
    };
    return {face(0), face(1), face(2), face(3), face(4)};
}

namespace {

// Labels Log det(g_i v, g_j v) = Log det(v, h v), h = g_i^-1 g_j, by the class of h. Of
// h and h^-1 the earlier-interned one carries the atom; det(v, h v) = -det(v, h^-1 v)
// supplies the other up to a multiple of pi*i.
class GroupLabeler {
public:
    GroupLabeler(const ProjVector& v, const Tolerances& tol) : v_(v), reg_(tol.cmp), tol_(tol) {}

    LogExpr label(const GroupElement& gi, const GroupElement& gj) {
        const GroupElement h = gi.inverse() * gj;
        const std::size_t id = reg_.intern(h);
        const std::size_t inv = reg_.intern(h.inverse());
        if (id <= inv) return LogExpr::atom(Atom::pair(static_cast<std::int64_t>(id), static_cast<std::int64_t>(id)), value(id));
        const cplx lv = value(inv);
        const long s = lv.imag() > 0.0 ? -1 : 1;
        return LogExpr::atom(Atom::pair(static_cast<std::int64_t>(inv), static_cast<std::int64_t>(inv)), lv) +
               LogExpr::pi_i(s);
    }

private:
    cplx value(std::size_t id) {
        auto it = values_.find(id);
        if (it == values_.end()) {
            it = values_.emplace(id, plog(det_pair(v_, reg_.at(id) * v_), tol_)).first;
        }
        return it->second;
    }

    ProjVector v_;
    ElementRegistry reg_;
    Tolerances tol_;
    std::map<std::size_t, cplx> values_;
};

}  // namespace

LambdaHat lambda_hat(const BarChain& c, std::uint64_t seed, const Tolerances& tol) {
    if (c.degree() != 3) throw Error(ErrorCode::DegreeError, "lambda_hat needs a degree-3 cycle");
    std::uint64_t state = seed;
    const std::uint64_t repair_seed = splitmix64(state);
    const std::uint64_t v_seed = splitmix64(state);

    RepairResult repair = repair_to_good(c, repair_seed, tol);
    const GenericVector gv = sample_generic_v(repair.hom, v_seed, tol);
    const auto configs = psi_v(repair.hom, gv.v, tol);

    GroupLabeler labeler(gv.v, tol);
    PreBlochElement element(tol);
    std::vector<LedgerTerm> ledger;
    double cr_residual = 0.0;
    for (std::size_t k = 0; k < configs.size(); ++k) {
        const auto& tuple = repair.hom.terms()[k].tuple;
        const LogDetLabeler label = [&](std::size_t i, std::size_t j, cplx) {
            return labeler.label(tuple[i], tuple[j]);
        };
        const ConfigTuple& cfg = configs[k].tuple;
        FlatteningTriple triple = sigma_hat(cfg, label, tol);
        const cplx cr = cross_ratio(hopf(cfg[0], tol), hopf(cfg[1], tol), hopf(cfg[2], tol), hopf(cfg[3], tol), tol);
        cr_residual = std::max(cr_residual, std::abs(triple.z() - cr) / std::max(1.0, std::abs(cr)));
        element.add(configs[k].coef, to_covering_point(triple, tol));
        ledger.push_back({configs[k].coef, std::move(triple)});
    }
    WedgeElement nu = nu_hat(ledger);
    if (!nu.is_zero()) throw Error(ErrorCode::NuNonzero, "nu_hat of the ledger does not cancel");
    return {std::move(element), std::move(repair), gv.v, gv.attempts, std::move(nu), cr_residual};
}

double volume_of(const PreBlochElement& e) {
    double sum = 0.0;
    for (const auto& t : e.terms()) sum += static_cast<double>(t.coef) * vol(t.point.z());
    return sum;
}

FiveTermFixture five_term_fixture(cplx x, cplx y, const Tolerances& tol) {
    five_tuple(x, y, tol);
    const auto finite = [&](cplx p) { return ProjVector(p, 1.0, tol); };
    const std::array<ProjVector, 5> v = {finite(1.0 / (1.0 - y)), finite(1.0 / (1.0 - x)), ProjVector(1.0, 0.0, tol),
                                         finite(0.0), finite(1.0)};
    const auto faces = sigma_hat_faces(v, tol);
    PreBlochElement relation(tol);
    cplx sum = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const CoveringPoint pt = to_covering_point(faces[i], tol);
        const long sign = i % 2 == 0 ? 1 : -1;
        relation.add(sign, pt);
        sum += static_cast<double>(sign) * lhat(pt, tol);
    }
    return {x, y, v, std::vector<FlatteningTriple>(faces.begin(), faces.end()), std::move(relation),
            check_flattening_condition(std::span<const FlatteningTriple, 5>(faces), tol), sum};
}

double mod1_deviation(cplx a, cplx b) {
    return std::max(distance_mod1(a.real(), b.real()), std::abs(a.imag() - b.imag()));
}

CcsReport ccs_value(const BarChain& c, std::uint64_t seed, int trials, const Tolerances& tol) {
    if (trials < 1) throw Error(ErrorCode::PreconditionFailed, "trials must be at least 1");
    CcsReport report;
    report.seed = seed;
    std::uint64_t state = seed;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed = splitmix64(state);
        const LambdaHat lam = lambda_hat(c, trial_seed, tol);
        const cplx raw = lhat(lam.element, tol);
        const cplx value = reduce_mod1(scale_to_unit(raw));
        const double volume = volume_of(lam.element);
        if (k == 0) {
            report.value_mod1 = value;
            report.raw_lhat = raw;
            report.volume = volume;
            report.terms = lam.element.size();
        }
        report.volume_residual = std::max(report.volume_residual, std::abs(volume - raw.imag()));
        report.max_crossratio_residual = std::max(report.max_crossratio_residual, lam.max_crossratio_residual);
        report.nu_exact = report.nu_exact && lam.nu.is_zero();
        report.trials.push_back({trial_seed, value, raw});
    }
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        for (std::size_t j = i + 1; j < report.trials.size(); ++j) {
            report.spread = std::max(report.spread,
                                     mod1_deviation(report.trials[i].value_mod1, report.trials[j].value_mod1));
        }
    }
    return report;
}

}  // namespace ccs
