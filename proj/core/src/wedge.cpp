#include "ccs/wedge.hpp"

#include <cmath>

#include "ccs/polylog.hpp"

namespace ccs {

std::string Atom::label() const {
    if (is_pi_i()) return "pi*i";
    return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

LogExpr LogExpr::atom(Atom a, cplx value) {
    LogExpr e;
    e.coef_[a] = 1;
    e.values_[a] = value;
    e.value_ = value;
    return e;
}

LogExpr LogExpr::pi_i(long multiple) {
    LogExpr e;
    if (multiple != 0) {
        e.coef_[Atom::pi_i()] = multiple;
        e.values_[Atom::pi_i()] = cplx(0.0, kPi);
    }
    e.value_ = cplx(0.0, kPi * static_cast<double>(multiple));
    return e;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
    for (const auto& [a, c] : o.coef_) {
        long& slot = coef_[a];
        slot += c;
        if (slot == 0) coef_.erase(a);
    }
    for (const auto& [a, v] : o.values_) values_.emplace(a, v);
    value_ += o.value_;
    return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) { return *this += -1 * LogExpr(o); }

LogExpr& LogExpr::operator*=(long k) {
    if (k == 0) coef_.clear();
    for (auto& [a, c] : coef_) c *= k;
    value_ *= static_cast<double>(k);
    return *this;
}

std::string to_string(WedgeVerdict v) {
    switch (v) {
        case WedgeVerdict::Zero: return "zero";
        case WedgeVerdict::Nonzero: return "nonzero";
        case WedgeVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

void WedgeElement::add(long coef, Atom a, Atom b) {
    if (coef == 0 || a == b) return;
    if (b < a) {
        std::swap(a, b);
        coef = -coef;
    }
    const auto key = std::make_pair(a, b);
    long& slot = terms_[key];
    slot += coef;
    if (slot == 0) terms_.erase(key);
}

WedgeElement WedgeElement::wedge(const LogExpr& a, const LogExpr& b) {
    WedgeElement w;
    for (const auto& [x, cx] : a.coefficients()) {
        for (const auto& [y, cy] : b.coefficients()) w.add(cx * cy, x, y);
    }
    for (const auto& [x, v] : a.atom_values()) w.values_.emplace(x, v);
    for (const auto& [x, v] : b.atom_values()) w.values_.emplace(x, v);
    return w;
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& o) {
    for (const auto& [k, c] : o.terms_) add(c, k.first, k.second);
    for (const auto& [x, v] : o.values_) values_.emplace(x, v);
    return *this;
}

WedgeElement& WedgeElement::operator-=(const WedgeElement& o) {
    for (const auto& [k, c] : o.terms_) add(-c, k.first, k.second);
    for (const auto& [x, v] : o.values_) values_.emplace(x, v);
    return *this;
}

WedgeElement& WedgeElement::operator*=(long k) {
    if (k == 0) terms_.clear();
    for (auto& [key, c] : terms_) c *= k;
    return *this;
}

double WedgeElement::numeric_invariant() const {
    double sum = 0.0;
    for (const auto& [k, c] : terms_) {
        const auto a = values_.find(k.first);
        const auto b = values_.find(k.second);
        if (a == values_.end() || b == values_.end()) continue;
        sum += static_cast<double>(c) * (std::conj(a->second) * b->second).imag();
    }
    return sum;
}

double NumericWedge::invariant() const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += static_cast<double>(t.coef) * (std::conj(t.a) * t.b).imag();
    return sum;
}

WedgeVerdict NumericWedge::verdict(double tol) const {
    return std::abs(invariant()) > tol ? WedgeVerdict::Nonzero : WedgeVerdict::Inconclusive;
}

}  // namespace ccs
