#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ccs/bar_complex.hpp"
#include "ccs/extended_bloch.hpp"

namespace ccs {

// (v0, ..., vn) with n <= 4 and pairwise distinct Hopf images.
class ConfigTuple {
public:
    explicit ConfigTuple(std::vector<ProjVector> v, const Tolerances& tol = kDefaultTol);

    const std::vector<ProjVector>& vectors() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const ProjVector& operator[](std::size_t i) const { return v_[i]; }

private:
    std::vector<ProjVector> v_;
};

struct ConfigTerm {
    long coef;
    ConfigTuple tuple;
};

// (g0, ..., gn) -> (g0 v, ..., gn v), termwise. Throws NotVGood naming the first bad pair.
std::vector<ConfigTerm> psi_v(const HomChain& c, const ProjVector& v, const Tolerances& tol = kDefaultTol);

// Flattening of the simplex spanned by four vectors, built from Log det(v_i, v_j).
// Throws DegenerateConfig.
FlatteningTriple sigma_hat(const ConfigTuple& t, const LogDetLabeler& label = position_atom,
                           const Tolerances& tol = kDefaultTol);

// sigma_hat of the five faces of a five-vector configuration (face i omits v_i), with
// atoms labeled by positions in the big tuple so the ten edge equations are comparable.
std::array<FlatteningTriple, 5> sigma_hat_faces(const std::array<ProjVector, 5>& v,
                                                const Tolerances& tol = kDefaultTol);

struct LambdaHat {
    PreBlochElement element;
    RepairResult repair;
    ProjVector v;
    int v_attempts = 0;
    WedgeElement nu;                   // exact nu_hat of the ledger; always zero
    double max_crossratio_residual = 0; // |exp(w0) - cross-ratio of the Hopf images|, worst term
};

// repair -> homogeneous form -> generic v -> psi_v -> sigma_hat, for a degree-3 cycle.
// Throws NotCycle, DegreeError, RepairFailed, SamplingExhausted, NuNonzero.
LambdaHat lambda_hat(const BarChain& c, std::uint64_t seed, const Tolerances& tol = kDefaultTol);

struct TrialValue {
    std::uint64_t seed;
    cplx value_mod1;
    cplx raw_lhat;
};

struct CcsReport {
    cplx value_mod1;   // 2 C2 in C/Z, real part in [0, 1)
    cplx raw_lhat;     // sum coef * lhat, unreduced
    double volume = 0; // sum coef * vol(z)
    double volume_residual = 0;
    double max_crossratio_residual = 0;
    bool nu_exact = true;
    std::size_t terms = 0;   // size of the first trial's lambda_hat element
    double spread = 0;       // largest pairwise deviation of value_mod1 across trials
    std::uint64_t seed = 0;
    std::vector<TrialValue> trials;
};

inline constexpr int kDefaultTrials = 5;

// -(1/2 pi^2) lhat(lambda_hat(c)) over independent trials.
CcsReport ccs_value(const BarChain& c, std::uint64_t seed, int trials = kDefaultTrials,
                    const Tolerances& tol = kDefaultTol);

double volume_of(const PreBlochElement& e);

struct FiveTermFixture {
    cplx x, y;
    std::array<ProjVector, 5> vectors;       // over 1/(1-y), 1/(1-x), inf, 0, 1
    std::vector<FlatteningTriple> faces;     // sigma_hat of face i, i = 0..4
    PreBlochElement relation;                // sum (-1)^i [face i]
    FlatteningReport flattening;
    cplx lhat_sum;
};

// Five points whose face cross-ratios are five_tuple(x, y), pushed through sigma_hat.
FiveTermFixture five_term_fixture(cplx x, cplx y, const Tolerances& tol = kDefaultTol);

// Deviation of two values in C/Z: circular on the real part, plain on the imaginary part.
double mod1_deviation(cplx a, cplx b);

}  // namespace ccs
