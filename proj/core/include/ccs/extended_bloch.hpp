#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ccs/core_types.hpp"
#include "ccs/covering_point.hpp"
#include "ccs/polylog.hpp"
#include "ccs/pre_bloch.hpp"
#include "ccs/wedge.hpp"

namespace ccs {

// A combinatorial flattening (w0, w1, w2): w0 and w1 are logarithms of z and 1/(1-z),
// and w2 = -w0 - w1 is enforced on construction. An optional ledger carries the same
// three log-parameters as integer combinations of symbolic atoms.
class FlatteningTriple {
public:
    FlatteningTriple(cplx w0, cplx w1, const Tolerances& tol = kDefaultTol);
    FlatteningTriple(const LogExpr& w0, const LogExpr& w1, const Tolerances& tol = kDefaultTol);

    cplx w0() const { return w_[0]; }
    cplx w1() const { return w_[1]; }
    cplx w2() const { return w_[2]; }
    cplx w(std::size_t i) const { return w_.at(i); }
    cplx z() const { return std::exp(w_[0]); }

    bool has_ledger() const { return ledger_.has_value(); }
    const std::array<LogExpr, 3>& ledger() const { return ledger_.value(); }

private:
    std::array<cplx, 3> w_;
    std::optional<std::array<LogExpr, 3>> ledger_;
};

// The correspondence l: flattenings <-> points of the cover.
CoveringPoint to_covering_point(const FlatteningTriple& t, const Tolerances& tol = kDefaultTol);
FlatteningTriple from_covering_point(const CoveringPoint& pt, const Tolerances& tol = kDefaultTol);

// (x, y, y/x, (1 - 1/x)/(1 - 1/y), (1 - x)/(1 - y)).
std::array<cplx, 5> five_tuple(cplx x, cplx y, const Tolerances& tol = kDefaultTol);

struct FlatteningReport {
    std::array<double, 10> residuals{};  // |signed edge sum|, edges in the order of kEdgeNames
    double max_residual = 0.0;
    bool holds = false;                  // max_residual <= tol.flat
    std::optional<bool> symbolic_zero;   // set when all five triples carry ledgers

    static constexpr std::array<const char*, 10> kEdgeNames = {
        "z0z1", "z1z2", "z2z3", "z3z4", "z4z0", "z0z2", "z1z3", "z2z4", "z3z0", "z4z1"};
};

// triples[i] flattens the face with vertex i removed. Report only; never throws.
FlatteningReport check_flattening_condition(std::span<const FlatteningTriple, 5> triples,
                                            const Tolerances& tol = kDefaultTol);

struct LedgerTerm {
    long coef;
    FlatteningTriple triple;
};

// nu_hat on ledger-backed flattenings: sum of coef * (w0 wedge w1), exact.
WedgeElement nu_hat(std::span<const LedgerTerm> terms);

// nu_hat on bare points: (Log z + p pi i) wedge (-Log(1-z) + q pi i), numerically.
NumericWedge nu_hat(const PreBlochElement& e, const Tolerances& tol = kDefaultTol);

// Symbolic form of Log det(v_i, v_j), i < j, for a tuple of vectors.
using LogDetLabeler = std::function<LogExpr(std::size_t i, std::size_t j, cplx log_det)>;

// Labels Log det(v_i, v_j) by the position pair (i, j).
LogExpr position_atom(std::size_t i, std::size_t j, cplx log_det);

// (01)^(02) - (01)^(12) + (02)^(12) over the log-determinant atoms. Throws DegenerateConfig.
WedgeElement mu(const ProjVector& v0, const ProjVector& v1, const ProjVector& v2,
                const LogDetLabeler& label = position_atom, const Tolerances& tol = kDefaultTol);

}  // namespace ccs
