#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "ccs/core_types.hpp"

namespace ccs {

inline constexpr int kMaxDegree = 4;

// Interns group elements up to elementwise tolerance, handing out dense ids in
// first-seen order.
class ElementRegistry {
public:
    explicit ElementRegistry(double tol = kDefaultTol.cmp) : tol_(tol) {}

    std::size_t intern(const GroupElement& g);
    const GroupElement& at(std::size_t id) const { return elements_.at(id); }
    std::size_t size() const { return elements_.size(); }

private:
    std::int64_t bucket(const GroupElement& g) const;

    double tol_;
    std::vector<GroupElement> elements_;
    std::unordered_multimap<std::int64_t, std::size_t> buckets_;
};

struct BarTerm {
    long coef;
    std::vector<GroupElement> symbol;  // [g1 | ... | gn]
};

// Inhomogeneous chain: integer combination of bar symbols of a fixed degree.
class BarChain {
public:
    explicit BarChain(int degree = 3);
    BarChain(int degree, std::vector<BarTerm> terms, const Tolerances& tol = kDefaultTol);

    int degree() const { return degree_; }
    const std::vector<BarTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(long coef, std::vector<GroupElement> symbol);
    BarChain& operator+=(const BarChain& o);
    BarChain& operator-=(const BarChain& o);
    BarChain scaled(long k) const;

    // Merges equal symbols (within tol.cmp) and drops zero coefficients. Order of first
    // appearance is kept.
    BarChain normalized(const Tolerances& tol = kDefaultTol) const;

private:
    int degree_;
    std::vector<BarTerm> terms_;
};

struct HomTerm {
    long coef;
    std::vector<GroupElement> tuple;  // (g0, ..., gn)
};

// Homogeneous chain. With the coinvariant flag set it represents an element of the
// G-coinvariants and every tuple starts with the identity.
class HomChain {
public:
    explicit HomChain(int degree = 3, bool coinvariant = false);
    HomChain(int degree, std::vector<HomTerm> terms, bool coinvariant, const Tolerances& tol = kDefaultTol);

    int degree() const { return degree_; }
    bool coinvariant() const { return coinvariant_; }
    const std::vector<HomTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(long coef, std::vector<GroupElement> tuple);
    HomChain& operator+=(const HomChain& o);
    HomChain& operator-=(const HomChain& o);

    HomChain normalized(const Tolerances& tol = kDefaultTol) const;

private:
    int degree_;
    bool coinvariant_;
    std::vector<HomTerm> terms_;
};

// Left-translates a tuple so that its first entry is the identity.
std::vector<GroupElement> canonical_tuple(const std::vector<GroupElement>& tuple);

// [g1|...|gn] -> (1, g1, g1 g2, ..., g1...gn), coinvariant form.
HomChain inhom_to_hom(const BarChain& c, const Tolerances& tol = kDefaultTol);
// (g0, ..., gn) -> [g0^-1 g1 | ... | g_{n-1}^-1 gn].
BarChain hom_to_inhom(const HomChain& c, const Tolerances& tol = kDefaultTol);

BarChain bar_boundary(const BarChain& c, const Tolerances& tol = kDefaultTol);
HomChain hom_boundary(const HomChain& c, const Tolerances& tol = kDefaultTol);

struct CycleCheck {
    bool is_cycle;
    BarChain residual;  // the normalized boundary
};
CycleCheck is_cycle(const BarChain& c, const Tolerances& tol = kDefaultTol);

struct OffendingPair {
    std::size_t term;
    std::size_t i;
    std::size_t j;
};

struct GoodnessReport {
    bool good;
    std::vector<OffendingPair> offending;
};

// Every tuple satisfies g_i != +-g_j.
GoodnessReport is_good(const HomChain& c, const Tolerances& tol = kDefaultTol);
GoodnessReport is_good(const BarChain& c, const Tolerances& tol = kDefaultTol);

// Every tuple satisfies |det(g_i v, g_j v)| > tol.vgood |g_i v| |g_j v|.
GoodnessReport is_v_good(const HomChain& c, const ProjVector& v, const Tolerances& tol = kDefaultTol);
GoodnessReport is_v_good(const BarChain& c, const ProjVector& v, const Tolerances& tol = kDefaultTol);

struct GenericVector {
    ProjVector v;
    int attempts;
};

inline constexpr int kMaxSamplingAttempts = 1000;

// Rejection sampling in the unit bidisc until the chain is v-good.
GenericVector sample_generic_v(const HomChain& c, std::uint64_t seed, const Tolerances& tol = kDefaultTol);

// s_g: prepends g to every tuple. For degree-0 input the identity reads
// boundary(cone(g, c)) = c - augmentation(c) (g).
HomChain cone(const GroupElement& g, const HomChain& c);

struct RepairResult {
    BarChain cycle;      // good cycle homologous to the input
    HomChain hom;        // the same cycle in coinvariant homogeneous form
    HomChain homotopy;   // degree n+1 chain H with boundary(H) = hom - inhom_to_hom(input)
    std::size_t samples; // number of generic cone points drawn
};

// Builds the cone chain map phi on canonical tuples, choosing each cone point generically
// so that the image is good, and the equivariant homotopy D between phi and the identity.
// Throws NotCycle, DegreeError, RepairFailed.
RepairResult repair_to_good(const BarChain& cycle, std::uint64_t seed, const Tolerances& tol = kDefaultTol);

// boundary(homotopy) == hom - inhom_to_hom(original) in the coinvariants.
bool verify_homotopy(const BarChain& original, const RepairResult& r, const Tolerances& tol = kDefaultTol);

// Random element of SL(2,C): entries uniform in the box [-1,1] + i[-1,1], rejected when
// |det| < 1/4, second column divided by the determinant.
GroupElement random_group_element(std::mt19937_64& rng);

// Random element of SL(2,R) with entries in [-1,1] before normalization.
GroupElement random_real_group_element(std::mt19937_64& rng);

// sum_{i=0}^{n-1} [t | t^i | t] for t the rotation by 2 pi / n.
BarChain torsion_cycle(int n);

// Termwise g x g^-1.
BarChain conjugate(const BarChain& c, const GroupElement& g);
// Entrywise complex conjugation.
BarChain complex_conjugate(const BarChain& c);

}  // namespace ccs
