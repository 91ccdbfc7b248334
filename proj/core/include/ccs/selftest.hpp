#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccs/tolerances.hpp"

namespace ccs {

struct SelftestCheck {
    std::string name;
    bool passed;
    std::string detail;
};

// Reduced versions of the property suites, seeded for reproducibility.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed, const Tolerances& tol = kDefaultTol);

}  // namespace ccs
