#pragma once

#include <vector>

#include "ccs/covering_point.hpp"

namespace ccs {

struct PreBlochTerm {
    long coef;
    CoveringPoint point;
};

// A representative in the extended pre-Bloch group: a finite integer combination of
// symbols [z; p, q]. Terms over the same point (z within tol.cmp, equal branches) merge.
class PreBlochElement {
public:
    explicit PreBlochElement(const Tolerances& tol = kDefaultTol) : tol_(tol) {}

    void add(long coef, const CoveringPoint& pt);
    PreBlochElement& operator+=(const PreBlochElement& other);
    PreBlochElement operator-() const;

    const std::vector<PreBlochTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

private:
    Tolerances tol_;
    std::vector<PreBlochTerm> terms_;
};

}  // namespace ccs
