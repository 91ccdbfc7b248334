#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccs/core_types.hpp"

namespace ccs {

// Symbolic logarithm atom. A pair label stands for Log det of a pair of vectors (either
// tuple positions or group-element classes, depending on who labels). The distinguished
// atom pi_i() stands for the constant pi*i.
struct Atom {
    std::int64_t first = -1;
    std::int64_t second = -1;

    static Atom pi_i() { return {-1, -1}; }
    static Atom pair(std::int64_t i, std::int64_t j) { return {i, j}; }
    bool is_pi_i() const { return first < 0; }
    std::string label() const;

    auto operator<=>(const Atom&) const = default;
};

// An integer combination of atoms together with its numeric value.
class LogExpr {
public:
    LogExpr() = default;
    static LogExpr atom(Atom a, cplx value);
    static LogExpr pi_i(long multiple = 1);

    const std::map<Atom, long>& coefficients() const { return coef_; }
    const std::map<Atom, cplx>& atom_values() const { return values_; }
    cplx value() const { return value_; }
    bool is_symbolic_zero() const { return coef_.empty(); }

    LogExpr& operator+=(const LogExpr& o);
    LogExpr& operator-=(const LogExpr& o);
    LogExpr& operator*=(long k);
    friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
    friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
    friend LogExpr operator*(long k, LogExpr a) { return a *= k; }
    LogExpr operator-() const { return -1 * LogExpr(*this); }

private:
    std::map<Atom, long> coef_;
    std::map<Atom, cplx> values_;
    cplx value_ = 0.0;
};

enum class WedgeVerdict { Zero, Nonzero, Inconclusive };

std::string to_string(WedgeVerdict v);

// Element of C wedge C over symbolic atoms; zero-testing is exact integer cancellation.
class WedgeElement {
public:
    WedgeElement() = default;
    static WedgeElement wedge(const LogExpr& a, const LogExpr& b);

    void add(long coef, Atom a, Atom b);
    WedgeElement& operator+=(const WedgeElement& o);
    WedgeElement& operator-=(const WedgeElement& o);
    WedgeElement& operator*=(long k);
    friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { return a -= b; }

    // Canonical terms: first atom < second atom, no zero coefficients.
    const std::map<std::pair<Atom, Atom>, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Sum of coef * Im(conj(a) b) over the atom values; an antisymmetric invariant.
    double numeric_invariant() const;

    friend bool operator==(const WedgeElement& x, const WedgeElement& y) { return x.terms_ == y.terms_; }

private:
    std::map<std::pair<Atom, Atom>, long> terms_;
    std::map<Atom, cplx> values_;
};

// Numeric-only wedge, for inputs that carry no atom provenance. Equality in C wedge C
// cannot be decided from numbers, so a vanishing invariant is only "inconclusive".
class NumericWedge {
public:
    void add(long coef, cplx a, cplx b) { terms_.push_back({coef, a, b}); }
    double invariant() const;
    WedgeVerdict verdict(double tol) const;

private:
    struct Term {
        long coef;
        cplx a;
        cplx b;
    };
    std::vector<Term> terms_;
};

}  // namespace ccs
