#pragma once

namespace ccs {

// Numerical thresholds shared by every module. All values are positive.
struct Tolerances {
    double det = 1e-9;     // |ad - bc - 1| accepted for SL(2) elements
    double cmp = 1e-8;     // elementwise equality of matrices and points
    double zero = 1e-12;   // "is zero" for scalars and vectors
    double vgood = 1e-7;   // scale-relative |det(g_i v, g_j v)| threshold
    double flat = 1e-9;    // flattening-condition residual threshold

    bool valid() const { return det > 0 && cmp > 0 && zero > 0 && vgood > 0 && flat > 0; }
};

inline const Tolerances kDefaultTol{};

}  // namespace ccs
