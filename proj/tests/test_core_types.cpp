#include <gtest/gtest.h>

#include <random>

#include "ccs/bar_complex.hpp"
#include "ccs/core_types.hpp"
#include "ccs/errors.hpp"
#include "helpers.hpp"

using namespace ccs;
using testing_helpers::random_complex;
using testing_helpers::random_vector;

namespace {

cplx finite(const ExtComplex& z) { return z.value(); }

}  // namespace

TEST(GroupElement, RejectsWrongDeterminant) {
    EXPECT_THROW(GroupElement(2.0, 0.0, 0.0, 1.0), Error);
    try {
        GroupElement(2.0, 0.0, 0.0, 1.0);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DeterminantError);
    }
    EXPECT_NO_THROW(GroupElement(2.0, 0.0, 0.0, 0.5));
}

TEST(GroupElement, InverseAndSignTest) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const GroupElement g = random_group_element(rng);
        EXPECT_TRUE((g * g.inverse()).approx_equal(GroupElement::identity(), 1e-12));
        EXPECT_TRUE(g.approx_equal_up_to_sign(-g, 1e-12));
        EXPECT_FALSE(g.approx_equal(-g, 1e-12));
    }
}

TEST(ProjVector, RejectsZero) {
    EXPECT_THROW(ProjVector(0.0, 0.0), Error);
    EXPECT_NO_THROW(ProjVector(0.0, 1e-6));
}

TEST(DetPair, HandValues) {
    EXPECT_EQ(det_pair({1.0, 0.0}, {0.0, 1.0}), cplx(1.0));
    EXPECT_EQ(det_pair({1.0, 0.0}, {1.0, 2.0}), cplx(2.0));
    EXPECT_EQ(det_pair({1.0, 1.0}, {1.0, 1.0}), cplx(0.0));
}

TEST(Hopf, Values) {
    EXPECT_TRUE(hopf({1.0, 0.0}).is_infinite());
    EXPECT_EQ(finite(hopf({3.0, 1.0})), cplx(3.0));
    EXPECT_NEAR(std::abs(finite(hopf({cplx(0, 2), 2.0})) - cplx(0, 1)), 0.0, 1e-15);
}

TEST(Moebius, Values) {
    const cplx z(0.3, -1.2);
    EXPECT_EQ(finite(moebius(GroupElement::identity(), z)), z);
    EXPECT_TRUE(moebius(GroupElement(0.0, -1.0, 1.0, 0.0), 0.0).is_infinite());
    const GroupElement g(2.0, 1.0, 3.0, 2.0);
    EXPECT_NEAR(std::abs(finite(moebius(g, ExtComplex::infinity())) - 2.0 / 3.0), 0.0, 1e-15);
    EXPECT_TRUE(moebius(g, -2.0 / 3.0).is_infinite());
    EXPECT_TRUE(moebius(GroupElement(1.0, 5.0, 0.0, 1.0), ExtComplex::infinity()).is_infinite());
}

TEST(Moebius, HopfEquivariance) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        const GroupElement g = random_group_element(rng);
        const ProjVector v = random_vector(rng);
        EXPECT_TRUE(approx_equal(hopf(g * v), moebius(g, hopf(v)), 1e-8));
    }
}

TEST(CrossRatio, HandValues) {
    const cplx z(0.25, 0.75);
    EXPECT_NEAR(std::abs(cross_ratio(0.0, ExtComplex::infinity(), 1.0, z) - z), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cross_ratio(1.0, 2.0, 3.0, 4.0) - 0.75), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cross_ratio(ExtComplex::infinity(), 0.0, 1.0, 0.5) - 2.0), 0.0, 1e-15);
    EXPECT_THROW(cross_ratio(0.0, 0.0, 1.0, 5.0), Error);
}

TEST(CrossRatio, ExtendedByZero) {
    EXPECT_EQ(cross_ratio_ext(0.0, 0.0, 1.0, 5.0), cplx(0.0));
    EXPECT_NEAR(std::abs(cross_ratio_ext(0.0, ExtComplex::infinity(), 1.0, 7.0) - 7.0), 0.0, 1e-15);
    EXPECT_EQ(cross_ratio_ext(ExtComplex::infinity(), ExtComplex::infinity(), 0.0, 1.0), cplx(0.0));
}

TEST(CrossRatio, MoebiusInvariance) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; ++k) {
        const GroupElement g = random_group_element(rng);
        std::array<ExtComplex, 4> z = {random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
        if (k % 10 == 0) z[k % 4] = ExtComplex::infinity();
        const cplx before = cross_ratio(z[0], z[1], z[2], z[3]);
        const cplx after = cross_ratio(moebius(g, z[0]), moebius(g, z[1]), moebius(g, z[2]), moebius(g, z[3]));
        EXPECT_NEAR(std::abs(after - before), 0.0, 1e-9 * std::max(1.0, std::abs(before)));
    }
}

TEST(CrossRatio, DeterminantForm) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 500; ++k) {
        const std::array<ProjVector, 4> v = {random_vector(rng), random_vector(rng), random_vector(rng),
                                             random_vector(rng)};
        const cplx cr = cross_ratio(hopf(v[0]), hopf(v[1]), hopf(v[2]), hopf(v[3]));
        const cplx dets =
            det_pair(v[0], v[3]) * det_pair(v[1], v[2]) / (det_pair(v[0], v[2]) * det_pair(v[1], v[3]));
        EXPECT_NEAR(std::abs(cr - dets), 0.0, 1e-9 * std::max(1.0, std::abs(cr)));
    }
}

TEST(CrossRatio, PermutationClasses) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const std::array<ExtComplex, 4> p = {random_complex(rng), random_complex(rng), random_complex(rng),
                                             random_complex(rng)};
        const cplx z = cross_ratio(p[0], p[1], p[2], p[3]);
        const double scale = std::max(1.0, std::abs(z));
        // double transpositions fix the cross-ratio
        EXPECT_NEAR(std::abs(cross_ratio(p[1], p[0], p[3], p[2]) - z), 0.0, 1e-9 * scale);
        EXPECT_NEAR(std::abs(cross_ratio(p[2], p[3], p[0], p[1]) - z), 0.0, 1e-9 * scale);
        EXPECT_NEAR(std::abs(cross_ratio(p[3], p[2], p[1], p[0]) - z), 0.0, 1e-9 * scale);
        // cyclic substitutions on the last three points
        const cplx z1 = cross_ratio(p[0], p[2], p[3], p[1]);
        const cplx z2 = cross_ratio(p[0], p[3], p[1], p[2]);
        const cplx e1 = 1.0 / (1.0 - z);
        const cplx e2 = 1.0 - 1.0 / z;
        const bool matches = (std::abs(z1 - e1) < 1e-8 * std::max(1.0, std::abs(e1)) &&
                              std::abs(z2 - e2) < 1e-8 * std::max(1.0, std::abs(e2))) ||
                             (std::abs(z1 - e2) < 1e-8 * std::max(1.0, std::abs(e2)) &&
                              std::abs(z2 - e1) < 1e-8 * std::max(1.0, std::abs(e1)));
        EXPECT_TRUE(matches);
        EXPECT_NEAR(std::abs(z * z1 * z2 + 1.0), 0.0, 1e-8 * std::max(1.0, std::abs(z * z1 * z2)));
    }
}

TEST(Rotation, QuarterHalfAndFull) {
    EXPECT_TRUE(rotation(4, 1).approx_equal(GroupElement(0.0, -1.0, 1.0, 0.0), 0.0));
    EXPECT_TRUE(rotation(2, 1).approx_equal(-GroupElement::identity(), 0.0));
    for (int n = 1; n <= 9; ++n) EXPECT_TRUE(rotation(n, n).approx_equal(GroupElement::identity(), 1e-15));
    EXPECT_THROW(rotation(0, 1), Error);
}
