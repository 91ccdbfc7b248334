#pragma once

#include <random>

#include "ccs/core_types.hpp"

namespace testing_helpers {

inline ccs::cplx random_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    return {n(rng), n(rng)};
}

inline ccs::ProjVector random_vector(std::mt19937_64& rng) {
    return ccs::ProjVector(random_complex(rng), random_complex(rng));
}

// Entries uniform in the unit square, as in the configuration property suites.
inline ccs::ProjVector unit_square_vector(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return ccs::ProjVector({u(rng), u(rng)}, {u(rng), u(rng)});
}

}  // namespace testing_helpers
