#include <gtest/gtest.h>

#include <random>

#include "ccs/ccs_pipeline.hpp"
#include "ccs/errors.hpp"
#include "ccs/polylog.hpp"
#include "helpers.hpp"

using namespace ccs;

namespace {

const cplx kI(0.0, 1.0);

BarChain random_boundary(std::mt19937_64& rng) {
    BarChain c(4);
    c.add(1, {random_group_element(rng), random_group_element(rng), random_group_element(rng),
              random_group_element(rng)});
    return bar_boundary(c);
}

double torsion_value(int n) { return std::fmod(1.0 - 2.0 / n, 1.0); }

}  // namespace

TEST(PsiV, IdentityPair) {
    std::mt19937_64 rng(61);
    const GroupElement g = random_group_element(rng);
    const HomChain c(1, {{1, {GroupElement::identity(), g}}}, false);
    const auto configs = psi_v(c, ProjVector(1.0, 0.0));
    ASSERT_EQ(configs.size(), 1u);
    EXPECT_EQ(configs[0].tuple[0].v1(), cplx(1.0));
    EXPECT_EQ(configs[0].tuple[0].v2(), cplx(0.0));
    EXPECT_EQ(configs[0].tuple[1].v1(), g.a());
    EXPECT_EQ(configs[0].tuple[1].v2(), g.c());
}

TEST(PsiV, RejectsBadVector) {
    const GroupElement d(2.0, 1.0, 0.0, 0.5);
    const HomChain c(1, {{1, {GroupElement::identity(), d}}}, false);
    try {
        psi_v(c, ProjVector(1.0, 0.0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotVGood);
    }
}

TEST(PsiV, ConjugationCovariance) {
    std::mt19937_64 rng(62);
    const HomChain c = inhom_to_hom(random_boundary(rng));
    const GroupElement g = random_group_element(rng);
    HomChain conj(c.degree(), false);
    for (const auto& t : c.terms()) {
        std::vector<GroupElement> tuple;
        for (const auto& x : t.tuple) tuple.push_back(g * x * g.inverse());
        conj.add(t.coef, tuple);
    }
    const ProjVector v = testing_helpers::random_vector(rng);
    const auto a = psi_v(c, v);
    const auto b = psi_v(conj, g * v);
    ASSERT_EQ(a.size(), b.size());
    // Equal as configurations modulo the diagonal action: all determinants agree.
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                const cplx da = det_pair(a[k].tuple[i], a[k].tuple[j]);
                const cplx db = det_pair(b[k].tuple[i], b[k].tuple[j]);
                EXPECT_NEAR(std::abs(da - db), 0.0, 1e-10 * std::max(1.0, std::abs(da)));
            }
        }
    }
}

TEST(PsiV, CommutesWithBoundary) {
    std::mt19937_64 rng(63);
    HomChain c(3, false);
    std::vector<GroupElement> t;
    for (int i = 0; i < 4; ++i) t.push_back(random_group_element(rng));
    c.add(1, t);
    const ProjVector v = testing_helpers::random_vector(rng);
    const auto whole = psi_v(c, v);
    const auto faces = psi_v(hom_boundary(c), v);
    ASSERT_EQ(faces.size(), 4u);
    for (std::size_t omit = 0; omit < 4; ++omit) {
        std::size_t m = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == omit) continue;
            EXPECT_NEAR(std::abs(faces[omit].tuple[m].v1() - whole[0].tuple[i].v1()), 0.0, 1e-13);
            EXPECT_NEAR(std::abs(faces[omit].tuple[m].v2() - whole[0].tuple[i].v2()), 0.0, 1e-13);
            ++m;
        }
        EXPECT_EQ(faces[omit].coef, omit % 2 == 0 ? 1 : -1);
    }
}

TEST(SigmaHat, HandConfiguration) {
    const ConfigTuple t({{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}});
    const FlatteningTriple f = sigma_hat(t);
    EXPECT_NEAR(std::abs(f.w0() - std::log(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.w1() - kI * kPi), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.w2() + std::log(2.0) + kI * kPi), 0.0, 1e-15);
    const CoveringPoint pt = to_covering_point(f);
    EXPECT_NEAR(std::abs(pt.z() - 2.0), 0.0, 1e-15);
    EXPECT_EQ(pt.p(), 0);
    EXPECT_EQ(pt.q(), 0);
}

TEST(SigmaHat, RecoversParameter) {
    const cplx z(0.3, 0.4);
    const CoveringPoint pt = to_covering_point(sigma_hat(ConfigTuple({{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, z}})));
    EXPECT_NEAR(std::abs(pt.z() - z), 0.0, 1e-15);
    EXPECT_EQ(pt.p(), 0);
    EXPECT_EQ(pt.q(), 0);
}

TEST(SigmaHat, ScalingStaysInFibre) {
    std::mt19937_64 rng(64);
    for (int k = 0; k < 50; ++k) {
        std::vector<ProjVector> v;
        for (int i = 0; i < 4; ++i) v.push_back(testing_helpers::random_vector(rng));
        const CoveringPoint a = to_covering_point(sigma_hat(ConfigTuple(v)));
        v[3] = v[3].scaled(5.0 * std::polar(1.0, 2.5));
        const CoveringPoint b = to_covering_point(sigma_hat(ConfigTuple(v)));
        EXPECT_NEAR(std::abs(a.z() - b.z()), 0.0, 1e-10 * std::max(1.0, std::abs(a.z())));
        EXPECT_EQ((a.p() - b.p()) % 2, 0);
        EXPECT_EQ((a.q() - b.q()) % 2, 0);
    }
}

TEST(SigmaHat, Degenerate) {
    EXPECT_THROW(ConfigTuple({{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}}), Error);
}

TEST(LambdaHat, BoundariesVanishModLattice) {
    std::mt19937_64 rng(65);
    for (int k = 0; k < 10; ++k) {
        const LambdaHat l = lambda_hat(random_boundary(rng), 100 + k);
        EXPECT_TRUE(l.nu.is_zero());
        const cplx m = lhat(l.element) / (2.0 * kPi2);
        EXPECT_LT(std::abs(m - std::round(m.real())), 1e-8);
    }
}

TEST(LambdaHat, IndependentOfSeed) {
    const BarChain t = torsion_cycle(5);
    const cplx a = scale_to_unit(lhat(lambda_hat(t, 1).element));
    const cplx b = scale_to_unit(lhat(lambda_hat(t, 2).element));
    EXPECT_LT(mod1_deviation(a, b), 1e-7);
}

TEST(LambdaHat, RequiresDegreeThreeCycle) {
    std::mt19937_64 rng(66);
    BarChain c(3);
    c.add(1, {random_group_element(rng), random_group_element(rng), random_group_element(rng)});
    try {
        lambda_hat(c, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCycle);
    }
    EXPECT_THROW(lambda_hat(BarChain(2), 1), Error);
}

TEST(CcsValue, TorsionValues) {
    // Regression constant: 2 C2 of sum_i [t|t^i|t], t of order n, equals -2/n mod 1.
    for (int n = 2; n <= 7; ++n) {
        const CcsReport r = ccs_value(torsion_cycle(n), 7, 10);
        EXPECT_LT(distance_mod1(r.value_mod1.real(), torsion_value(n)), 1e-6) << n;
        EXPECT_LT(std::abs(r.value_mod1.imag()), 1e-6) << n;
        const double scaled = n * r.value_mod1.real();
        EXPECT_LT(std::abs(scaled - std::round(scaled)), 1e-5) << n;
        EXPECT_LT(r.spread, 1e-7) << n;
        EXPECT_LT(r.volume_residual, 1e-8) << n;
        EXPECT_TRUE(r.nu_exact);
        EXPECT_EQ(r.trials.size(), 10u);
        EXPECT_GE(r.value_mod1.real(), 0.0);
        EXPECT_LT(r.value_mod1.real(), 1.0);
    }
}

TEST(CcsValue, EmptyCycle) {
    const CcsReport r = ccs_value(BarChain(3), 1, 2);
    EXPECT_EQ(r.value_mod1, cplx(0.0));
    EXPECT_EQ(r.terms, 0u);
}

TEST(CcsValue, BoundariesAreZero) {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 100; ++k) {
        const CcsReport r = ccs_value(random_boundary(rng), 1000 + k, 1);
        EXPECT_LT(distance_mod1(r.value_mod1.real(), 0.0), 1e-7);
        EXPECT_LT(std::abs(r.value_mod1.imag()), 1e-7);
        EXPECT_LT(std::abs(r.volume), 1e-7);
        EXPECT_LT(r.volume_residual, 1e-8);
    }
}

TEST(CcsValue, ConjugationInvariance) {
    std::mt19937_64 rng(68);
    for (int n : {3, 4, 5}) {
        const BarChain t = torsion_cycle(n);
        const GroupElement g = random_group_element(rng);
        const CcsReport a = ccs_value(t, 11, 3);
        const CcsReport b = ccs_value(conjugate(t, g), 12, 3);
        EXPECT_LT(mod1_deviation(a.value_mod1, b.value_mod1), 1e-7) << n;
    }
}

TEST(CcsValue, ComplexConjugationEquivariance) {
    std::mt19937_64 rng(69);
    for (int n : {3, 5}) {
        const BarChain c = conjugate(torsion_cycle(n), random_group_element(rng));
        const CcsReport a = ccs_value(c, 21, 2);
        const CcsReport b = ccs_value(complex_conjugate(c), 22, 2);
        EXPECT_LT(mod1_deviation(b.value_mod1, std::conj(a.value_mod1)), 1e-7);
    }
}

TEST(CcsValue, SeedsAreReproducible) {
    const CcsReport a = ccs_value(torsion_cycle(3), 5, 3);
    const CcsReport b = ccs_value(torsion_cycle(3), 5, 3);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t k = 0; k < a.trials.size(); ++k) {
        EXPECT_EQ(a.trials[k].seed, b.trials[k].seed);
        EXPECT_EQ(a.trials[k].raw_lhat, b.trials[k].raw_lhat);
    }
}

TEST(VolumeOf, Values) {
    PreBlochElement flat;
    flat.add(1, CoveringPoint(0.5, 0, 0));
    flat.add(-2, CoveringPoint(3.0, 2, 0));
    EXPECT_EQ(volume_of(flat), 0.0);
    PreBlochElement reg;
    reg.add(1, CoveringPoint(std::polar(1.0, kPi / 3), 0, 0));
    EXPECT_NEAR(volume_of(reg), 1.0149416064096536, 1e-13);
    PreBlochElement bar;
    bar.add(1, CoveringPoint(std::polar(1.0, -kPi / 3), 0, 0));
    EXPECT_NEAR(volume_of(bar), -volume_of(reg), 1e-15);
}

TEST(FiveTermFixture, HoldsExactly) {
    const FiveTermFixture f = five_term_fixture(cplx(0.3, 0.4), cplx(0.6, 0.2));
    const auto ft = five_tuple(cplx(0.3, 0.4), cplx(0.6, 0.2));
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(f.faces[i].z() - ft[i]), 0.0, 1e-12);
    EXPECT_TRUE(f.flattening.holds);
    EXPECT_TRUE(f.flattening.symbolic_zero.value_or(false));
    EXPECT_LT(std::abs(f.lhat_sum), 1e-9);
}
