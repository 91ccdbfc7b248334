#pragma once

#include "ccs/core_types.hpp"

namespace ccs {

// A point (z; p, q) of the abelian cover of C \ {0, 1}. The even integers p and q
// select the branches of Log z and Log(1/(1-z)). Real z on a cut is read as the
// upper side (z + 0i), matching the principal argument.
class CoveringPoint {
public:
    CoveringPoint(cplx z, long p, long q, const Tolerances& tol = kDefaultTol);

    cplx z() const { return z_; }
    long p() const { return p_; }
    long q() const { return q_; }

private:
    cplx z_;
    long p_;
    long q_;
};

}  // namespace ccs
