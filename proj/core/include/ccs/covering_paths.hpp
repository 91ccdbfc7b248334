#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccs/core_types.hpp"
#include "ccs/covering_point.hpp"

namespace ccs {

// Piecewise-linear path t -> (x0(t), x1(t)) through the listed vertices, one segment
// per consecutive pair.
class ParamPath {
public:
    using Vertex = std::pair<cplx, cplx>;

    explicit ParamPath(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

    ParamPath reversed() const;
    // Requires this->back() == next.front().
    ParamPath then(const ParamPath& next) const;

private:
    std::vector<Vertex> vertices_;
};

// Branch integers (p_i, q_i) for each coordinate of five_tuple(x0, x1).
class LiftedFiveTuple {
public:
    LiftedFiveTuple(cplx x0, cplx x1, std::array<long, 5> p = {}, std::array<long, 5> q = {},
                    const Tolerances& tol = kDefaultTol);

    cplx x0() const { return x0_; }
    cplx x1() const { return x1_; }
    const std::array<cplx, 5>& values() const { return values_; }
    const std::array<long, 5>& p() const { return p_; }
    const std::array<long, 5>& q() const { return q_; }
    CoveringPoint point(std::size_t i) const;

    friend bool operator==(const LiftedFiveTuple& a, const LiftedFiveTuple& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    cplx x0_, x1_;
    std::array<cplx, 5> values_;
    std::array<long, 5> p_, q_;
    Tolerances tol_;
};

// Carries the branch integers of start along path: crossing (-inf, 0) downward adds 2 to
// p, crossing (1, inf) downward adds 2 to q, upward crossings subtract 2. Every segment
// is split into at least min_pieces parts and refined further until no coordinate can
// wind around 0 or 1 inside a piece. Throws PathDegenerate.
LiftedFiveTuple lift_path(const ParamPath& path, const LiftedFiveTuple& start, int min_pieces = 1,
                          const Tolerances& tol = kDefaultTol);

// sum_i (-1)^i lhat(point_i).
cplx five_term_sum_along(const LiftedFiveTuple& lift, const Tolerances& tol = kDefaultTol);

inline constexpr int kLoopSides = 64;

// Which coordinate moves and around what.
enum class Mover { X0, X1 };

// A lollipop loop based at (x0, x1): the moving coordinate walks toward center, runs
// |turns| times around a regular 64-gon (counterclockwise for turns > 0), and walks back.
// The radius keeps clear of the other special points 0, 1 and the fixed coordinate.
ParamPath lollipop(cplx x0, cplx x1, Mover mover, cplx center, int turns);

struct Windings {
    int p0 = 0, q0 = 0, r = 0, p1 = 0, q1 = 0;
};

// x0: p0 times counterclockwise around 0, q0 clockwise around 1, r clockwise around x1;
// then x1: p1 counterclockwise around 0, q1 clockwise around 1.
ParamPath composite_loop(cplx x0, cplx x1, const Windings& w);

// The endpoint branches predicted in closed form for composite_loop from an all-zero lift.
std::array<std::pair<long, long>, 5> expected_pq(const Windings& w);

struct PqCheck {
    bool match = false;
    std::array<std::pair<long, long>, 5> expected{};
    std::array<std::pair<long, long>, 5> actual{};
    cplx five_term_sum;
    std::string diff;  // empty when match
};

struct BasePoint {
    cplx x0, x1;
    double min_imag;  // smallest imaginary part among the five coordinates
};

// All five coordinates in the upper half plane. Tries x0 = 0.5 + 0.8i, x1 = 0.3 + 0.6i
// first, then a grid, keeping the point with the largest smallest imaginary part.
BasePoint find_ft_plus_base(const Tolerances& tol = kDefaultTol);

std::optional<BasePoint> check_ft_plus(cplx x0, cplx x1, const Tolerances& tol = kDefaultTol);

PqCheck verify_pq_pattern(const Windings& w, const BasePoint& base, const Tolerances& tol = kDefaultTol);

}  // namespace ccs
