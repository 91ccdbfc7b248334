#include <gtest/gtest.h>

#include <random>

#include "ccs/errors.hpp"
#include "ccs/extended_bloch.hpp"
#include "ccs/polylog.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace ccs;

TEST(Plog, Branch) {
    EXPECT_EQ(plog(1.0), cplx(0.0));
    EXPECT_EQ(plog(-1.0), cplx(0.0, kPi));
    EXPECT_EQ(plog(cplx(-1.0, -0.0)), cplx(0.0, kPi));
    const cplx v = plog(cplx(0.0, std::exp(1.0)));
    EXPECT_NEAR(v.real(), 1.0, 1e-15);
    EXPECT_NEAR(v.imag(), kPi / 2, 1e-15);
    EXPECT_THROW(plog(0.0), Error);
}

TEST(Li2, SpecialValues) {
    EXPECT_EQ(li2(0.0), cplx(0.0));
    EXPECT_NEAR(std::abs(li2(1.0) - kPi2 / 6.0), 0.0, 1e-14);
    const double ln2 = std::log(2.0);
    EXPECT_NEAR(std::abs(li2(0.5) - (kPi2 / 12.0 - ln2 * ln2 / 2.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(li2(0.5) - oracle::li2(0.5)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(li2(-1.0) + kPi2 / 12.0), 0.0, 1e-14);
}

TEST(Li2, AgreesWithQuadratureInDisc) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> r(0.0, 0.95);
    std::uniform_real_distribution<double> a(-kPi, kPi);
    for (int k = 0; k < 100; ++k) {
        const cplx z = std::polar(r(rng), a(rng));
        EXPECT_NEAR(std::abs(li2(z) - oracle::li2(z)), 0.0, 1e-10) << z;
    }
}

TEST(Li2, InversionOutsideDisc) {
    // Li2(z) + Li2(1/z) = -pi^2/6 - Log(-z)^2 / 2, checked against quadrature of Li2(1/z).
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> r(1.1, 10.0);
    std::uniform_real_distribution<double> a(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        const cplx z = std::polar(r(rng), a(rng));
        const cplx lg = std::log(-z);
        const cplx expected = -oracle::li2(1.0 / z) - kPi2 / 6.0 - 0.5 * lg * lg;
        EXPECT_NEAR(std::abs(li2(z) - expected), 0.0, 1e-10 * std::max(1.0, std::abs(expected))) << z;
    }
}

TEST(Li2, CutNeedsSide) {
    EXPECT_THROW(li2(2.0), Error);
    const cplx up = li2(2.0, CutSide::Upper);
    const cplx down = li2(2.0, CutSide::Lower);
    EXPECT_NEAR(std::abs(up - li2(cplx(2.0, 1e-13))), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(down - li2(cplx(2.0, -1e-13))), 0.0, 1e-10);
    EXPECT_NEAR(up.imag() - down.imag(), 2.0 * kPi * std::log(2.0), 1e-12);
}

TEST(RogersL, Values) {
    EXPECT_NEAR(std::abs(rogers_L(0.5) + kPi2 / 12.0), 0.0, 1e-14);
    EXPECT_NEAR(rogers_L(0.3).real() + rogers_L(0.7).real(), -kPi2 / 6.0, 1e-14);
    const double sum = rogers_L(0.5).real() - rogers_L(0.25).real() + rogers_L(0.5).real() -
                       rogers_L(1.0 / 3.0).real() + rogers_L(2.0 / 3.0).real();
    EXPECT_NEAR(sum, 0.0, 1e-13);
}

TEST(RogersL, ReflectionAndFiveTerm) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(1e-3, 1.0 - 1e-3);
    for (int k = 0; k < 1000; ++k) {
        const double x = u(rng);
        EXPECT_NEAR(rogers_L(x).real() + rogers_L(1.0 - x).real() + kPi2 / 6.0, 0.0, 1e-10);
        double a = u(rng);
        double b = u(rng);
        if (a < b) std::swap(a, b);
        if (a - b < 1e-6) continue;
        const auto ft = five_tuple(a, b);
        double s = 0.0;
        for (std::size_t i = 0; i < 5; ++i) s += (i % 2 == 0 ? 1 : -1) * rogers_L(ft[i]).real();
        EXPECT_NEAR(s, 0.0, 1e-9);
    }
}

TEST(RogersLReal, Extension) {
    EXPECT_EQ(rogers_L_real(1.0), 0.0);
    EXPECT_NEAR(rogers_L_real(0.0), -kPi2 / 6.0, 1e-15);
    EXPECT_NEAR(rogers_L_real(2.0), kPi2 / 12.0, 1e-14);
    EXPECT_NEAR(rogers_L_real(-1.0), -rogers_L_real(0.5), 1e-15);
}

TEST(Vol, Values) {
    EXPECT_EQ(vol(0.5), 0.0);
    EXPECT_NEAR(vol(std::polar(1.0, kPi / 3)), 1.0149416064096536, 1e-13);
    EXPECT_NEAR(vol(std::polar(1.0, kPi / 3)), oracle::simplex_volume(std::polar(1.0, kPi / 3)), 1e-10);
}

TEST(Vol, MatchesLobachevskyOracle) {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 200; ++k) {
        const cplx z = testing_helpers::random_complex(rng, 2.0);
        EXPECT_NEAR(vol(z), oracle::simplex_volume(z), 1e-9) << z;
        EXPECT_NEAR(vol(z), -vol(std::conj(z)), 1e-12);
    }
}

TEST(Vol, SharedByCyclicParameters) {
    std::mt19937_64 rng(25);
    for (int k = 0; k < 1000; ++k) {
        const cplx z = testing_helpers::random_complex(rng, 2.0);
        EXPECT_NEAR(vol(1.0 / (1.0 - z)), vol(z), 1e-9);
        EXPECT_NEAR(vol(1.0 - 1.0 / z), vol(z), 1e-9);
    }
}

TEST(Lhat, Values) {
    EXPECT_NEAR(std::abs(lhat(CoveringPoint(0.5, 0, 0)) + kPi2 / 12.0), 0.0, 1e-14);
    const cplx i(0.0, 1.0);
    const cplx d1 = lhat(CoveringPoint(i, 0, 2)) - lhat(CoveringPoint(i, 0, 0));
    EXPECT_NEAR(std::abs(d1 + kPi2 / 2.0), 0.0, 1e-13);
    const cplx z(2.0, 1.0);
    const cplx d2 = lhat(CoveringPoint(z, 2, 0)) - lhat(CoveringPoint(z, 0, 0));
    EXPECT_NEAR(std::abs(d2 + cplx(0.0, kPi) * std::log(1.0 / (-1.0 - i))), 0.0, 1e-13);
}

TEST(Lhat, CutIdentificationsShiftByTwoPiSquaredLattice) {
    // (x + 0i; p, q) ~ (x - 0i; p + 2, q) over (-inf, 0) and (x + 0i; p, q) ~ (x - 0i; p, q + 2)
    // over (1, inf): approaching from both sides, lhat values must agree mod 2 pi^2.
    const double eps = 1e-11;
    for (const double x : {-3.0, -0.4, 1.7, 5.0}) {
        for (long p : {-2L, 0L, 4L}) {
            for (long q : {-4L, 0L, 2L}) {
                const cplx above = lhat(CoveringPoint(cplx(x, eps), p, q));
                const bool left = x < 0;
                const cplx below = lhat(CoveringPoint(cplx(x, -eps), left ? p + 2 : p, left ? q : q + 2));
                const cplx d = (above - below) / (2.0 * kPi2);
                EXPECT_NEAR(std::abs(d - std::round(d.real())), 0.0, 1e-8) << x << " " << p << " " << q;
            }
        }
    }
}

TEST(ChiHat, LandsOnRational) {
    for (long m = 1; m <= 12; ++m) {
        for (long k = 1; k < m; ++k) {
            const cplx v = scale_to_unit(lhat(chi_hat({k, m})));
            EXPECT_NEAR(distance_mod1(v.real(), static_cast<double>(k) / m), 0.0, 1e-10);
            EXPECT_NEAR(v.imag(), 0.0, 1e-10);
        }
    }
    EXPECT_THROW(chi_hat({0, 5}), Error);
    EXPECT_THROW(chi_hat({3, 3}), Error);
}

TEST(Reduce, Mod1) {
    EXPECT_EQ(reduce_mod1({-0.25, 2.0}), cplx(0.75, 2.0));
    EXPECT_NEAR(distance_mod1(0.999999, 0.0), 1e-6, 1e-12);
}
