#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccs/core_types.hpp"

namespace ccs {

// An element of SL(2,R).
class RealGroupElement {
public:
    RealGroupElement() = default;
    RealGroupElement(double a, double b, double c, double d, const Tolerances& tol = kDefaultTol);
    // Throws DeterminantError if g has an imaginary part above tol.zero.
    static RealGroupElement from_complex(const GroupElement& g, const Tolerances& tol = kDefaultTol);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    RealGroupElement inverse() const;
    GroupElement to_complex() const { return GroupElement::unchecked(a_, b_, c_, d_); }
    friend RealGroupElement operator*(const RealGroupElement& g, const RealGroupElement& h);

private:
    double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

bool is_positive(const RealGroupElement& g, const Tolerances& tol = kDefaultTol);
bool is_nonzero(const RealGroupElement& g, const Tolerances& tol = kDefaultTol);

// g1 < g2 iff g1^-1 g2 is positive. Throws Incomparable when g1^-1 g2 has c = 0.
bool less(const RealGroupElement& g1, const RealGroupElement& g2, const Tolerances& tol = kDefaultTol);

// Permutation perm with g[perm[0]] < g[perm[1]] < ..., found by bubble sort and then
// checked on every pair. Throws Incomparable or NotSortable.
std::vector<std::size_t> sort_tuple(const std::vector<RealGroupElement>& g, const Tolerances& tol = kDefaultTol);

// L([g0 inf : g1 inf : g2 inf : g3 inf]) with the real extension of L; a repeated
// boundary point makes the cross-ratio zero.
double rogers_cocycle(const RealGroupElement& g0, const RealGroupElement& g1, const RealGroupElement& g2,
                      const RealGroupElement& g3, const Tolerances& tol = kDefaultTol);

struct SmallPositiveReport {
    double z = 0;            // real cross-ratio of (1, g1, g1g2, g1g2g3) on v = (1, 0)
    long p = 0;
    long q = 0;
    double lhat_value = 0;
    double rogers_value = 0;
    double agreement = 0;    // |lhat(z; p, q) - L(z)|

    bool zero_branches() const { return p == 0 && q == 0; }
    bool z_in_unit_interval() const { return z > 0.0 && z < 1.0; }
};

// Checks the conditions of the small positive case on v = (1, 0) in order: g1, g2, g3
// positive; distinct vectors; the boundary ordering inf > g1 inf > g1g2 inf > g1g2g3 inf;
// det(v_i, v_j) > 0 for i < j. Throws PreconditionFailed naming the first failure.
SmallPositiveReport check_small_positive_agreement(const RealGroupElement& g1, const RealGroupElement& g2,
                                                   const RealGroupElement& g3, const Tolerances& tol = kDefaultTol);

// Entries within 0.2 of the identity, lower-left entry in (0, 0.2).
RealGroupElement sample_small_positive(std::mt19937_64& rng);

struct SmallTriple {
    RealGroupElement g1, g2, g3;
    int rejected = 0;  // triples discarded because a product was not positive
};

// Draws small positive triples until g1g2, g2g3 and g1g2g3 are positive as well.
SmallTriple sample_small_positive_triple(std::mt19937_64& rng, const Tolerances& tol = kDefaultTol);

struct RealCheckSummary {
    int samples = 0;
    int passed = 0;
    int rejected = 0;
    double max_agreement = 0;
    std::vector<std::string> failures;
};

RealCheckSummary run_real_check(int samples, std::uint64_t seed, const Tolerances& tol = kDefaultTol);

}  // namespace ccs
