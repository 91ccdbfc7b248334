#include "ccs/covering_paths.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccs/errors.hpp"
#include "ccs/extended_bloch.hpp"
#include "ccs/polylog.hpp"

namespace ccs {

ParamPath::ParamPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorCode::PathDegenerate, "path without vertices");
}

ParamPath ParamPath::reversed() const {
    return ParamPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

ParamPath ParamPath::then(const ParamPath& next) const {
    const Vertex a = back();
    const Vertex b = next.front();
    if (std::abs(a.first - b.first) > 1e-12 || std::abs(a.second - b.second) > 1e-12) {
        throw Error(ErrorCode::PathDegenerate, "concatenated paths do not meet");
    }
    std::vector<Vertex> v = vertices_;
    v.insert(v.end(), next.vertices_.begin() + 1, next.vertices_.end());
    return ParamPath(std::move(v));
}

namespace {

std::array<cplx, 5> tuple_or_degenerate(cplx x0, cplx x1, const Tolerances& tol) {
    try {
        return five_tuple(x0, x1, tol);
    } catch (const Error& e) {
        throw Error(ErrorCode::PathDegenerate, e.what());
    }
}

}  // namespace

LiftedFiveTuple::LiftedFiveTuple(cplx x0, cplx x1, std::array<long, 5> p, std::array<long, 5> q,
                                 const Tolerances& tol)
    : x0_(x0), x1_(x1), values_(tuple_or_degenerate(x0, x1, tol)), p_(p), q_(q), tol_(tol) {
    for (std::size_t i = 0; i < 5; ++i) {
        if (p_[i] % 2 != 0 || q_[i] % 2 != 0) throw Error(ErrorCode::NotEven, "branch integers must be even");
    }
}

CoveringPoint LiftedFiveTuple::point(std::size_t i) const { return CoveringPoint(values_.at(i), p_[i], q_[i], tol_); }

namespace {

constexpr int kMaxRefineDepth = 48;

bool upper(cplx z) { return z.imag() >= 0.0; }

struct Segment {
    cplx x0a, x1a, x0b, x1b;
    std::pair<cplx, cplx> at(double s) const { return {x0a + s * (x0b - x0a), x1a + s * (x1b - x1a)}; }
};

// A piece is safe when no coordinate moves by more than a tenth of its distance to 0 and 1,
// so it cannot pass from one cut to the other or wind around a branch point.
bool safe_piece(const std::array<cplx, 5>& a, const std::array<cplx, 5>& b) {
    for (std::size_t i = 0; i < 5; ++i) {
        const double room = std::min({std::abs(a[i]), std::abs(1.0 - a[i]), std::abs(b[i]), std::abs(1.0 - b[i])});
        if (std::abs(a[i] - b[i]) > 0.1 * room) return false;
    }
    return true;
}

void apply_crossing(const Segment& seg, double sa, double sb, std::size_t i, std::array<long, 5>& p,
                    std::array<long, 5>& q, const Tolerances& tol) {
    const auto coord = [&](double s) {
        const auto [x0, x1] = seg.at(s);
        return tuple_or_degenerate(x0, x1, tol)[i];
    };
    const bool down = upper(coord(sa));
    double lo = sa;
    double hi = sb;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (upper(coord(mid)) == down) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double re = coord(0.5 * (lo + hi)).real();
    if (std::abs(re) <= tol.zero || std::abs(re - 1.0) <= tol.zero) {
        throw Error(ErrorCode::PathDegenerate, "coordinate x" + std::to_string(i) + " crosses a branch point");
    }
    const long step = down ? 2 : -2;
    if (re < 0.0) {
        p[i] += step;
    } else if (re > 1.0) {
        q[i] += step;
    }
}

void lift_piece(const Segment& seg, double sa, double sb, const std::array<cplx, 5>& a, std::array<long, 5>& p,
                std::array<long, 5>& q, int depth, const Tolerances& tol) {
    const auto [x0, x1] = seg.at(sb);
    const std::array<cplx, 5> b = tuple_or_degenerate(x0, x1, tol);
    if (!safe_piece(a, b)) {
        if (depth >= kMaxRefineDepth) throw Error(ErrorCode::PathDegenerate, "refinement did not isolate crossings");
        const double mid = 0.5 * (sa + sb);
        const auto [m0, m1] = seg.at(mid);
        const std::array<cplx, 5> m = tuple_or_degenerate(m0, m1, tol);
        lift_piece(seg, sa, mid, a, p, q, depth + 1, tol);
        lift_piece(seg, mid, sb, m, p, q, depth + 1, tol);
        return;
    }
    for (std::size_t i = 0; i < 5; ++i) {
        if (upper(a[i]) != upper(b[i])) apply_crossing(seg, sa, sb, i, p, q, tol);
    }
}

}  // namespace

LiftedFiveTuple lift_path(const ParamPath& path, const LiftedFiveTuple& start, int min_pieces, const Tolerances& tol) {
    const auto [s0, s1] = path.front();
    if (std::abs(s0 - start.x0()) > tol.cmp || std::abs(s1 - start.x1()) > tol.cmp) {
        throw Error(ErrorCode::PathDegenerate, "start lift is not over the start of the path");
    }
    std::array<long, 5> p = start.p();
    std::array<long, 5> q = start.q();
    const auto& v = path.vertices();
    const int pieces = std::max(1, min_pieces);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const Segment seg{v[k].first, v[k].second, v[k + 1].first, v[k + 1].second};
        for (int j = 0; j < pieces; ++j) {
            const double sa = static_cast<double>(j) / pieces;
            const double sb = static_cast<double>(j + 1) / pieces;
            const auto [x0, x1] = seg.at(sa);
            lift_piece(seg, sa, sb, tuple_or_degenerate(x0, x1, tol), p, q, 0, tol);
        }
    }
    const auto [e0, e1] = path.back();
    return LiftedFiveTuple(e0, e1, p, q, tol);
}

cplx five_term_sum_along(const LiftedFiveTuple& lift, const Tolerances& tol) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < 5; ++i) sum += (i % 2 == 0 ? 1.0 : -1.0) * lhat(lift.point(i), tol);
    return sum;
}

ParamPath lollipop(cplx x0, cplx x1, Mover mover, cplx center, int turns) {
    const cplx base = mover == Mover::X0 ? x0 : x1;
    const cplx fixed = mover == Mover::X0 ? x1 : x0;
    const auto vertex = [&](cplx moving) {
        return mover == Mover::X0 ? ParamPath::Vertex{moving, x1} : ParamPath::Vertex{x0, moving};
    };
    if (turns == 0) return ParamPath({vertex(base)});

    double rho = 0.5 * std::abs(base - center);
    for (const cplx s : {cplx(0.0), cplx(1.0), fixed}) {
        const double d = std::abs(s - center);
        if (d > 1e-12) rho = std::min(rho, 0.5 * d);
    }
    const double theta0 = std::arg(base - center);
    const cplx start = center + std::polar(rho, theta0);
    std::vector<ParamPath::Vertex> v = {vertex(base), vertex(start)};
    const int steps = kLoopSides * std::abs(turns);
    const double dir = turns > 0 ? 1.0 : -1.0;
    for (int k = 1; k < steps; ++k) {
        v.push_back(vertex(center + std::polar(rho, theta0 + dir * 2.0 * kPi * k / kLoopSides)));
    }
    v.push_back(vertex(start));
    v.push_back(vertex(base));
    return ParamPath(std::move(v));
}

ParamPath composite_loop(cplx x0, cplx x1, const Windings& w) {
    return lollipop(x0, x1, Mover::X0, 0.0, w.p0)
        .then(lollipop(x0, x1, Mover::X0, 1.0, -w.q0))
        .then(lollipop(x0, x1, Mover::X0, x1, -w.r))
        .then(lollipop(x0, x1, Mover::X1, 0.0, w.p1))
        .then(lollipop(x0, x1, Mover::X1, 1.0, -w.q1));
}

std::array<std::pair<long, long>, 5> expected_pq(const Windings& w) {
    const long p0 = w.p0, q0 = w.q0, r = w.r, p1 = w.p1, q1 = w.q1;
    return {{
        {2 * p0, 2 * q0},
        {2 * p1, 2 * q1},
        {-2 * p0 + 2 * p1, 2 * p0 + 2 * r},
        {-2 * p0 - 2 * q0 + 2 * p1 + 2 * q1, 2 * p0 - 2 * q1 + 2 * r},
        {-2 * q0 + 2 * q1, -2 * q1 + 2 * r},
    }};
}

std::optional<BasePoint> check_ft_plus(cplx x0, cplx x1, const Tolerances& tol) {
    std::array<cplx, 5> x;
    try {
        x = five_tuple(x0, x1, tol);
    } catch (const Error&) {
        return std::nullopt;
    }
    double m = x[0].imag();
    for (const cplx z : x) m = std::min(m, z.imag());
    if (!(m > 0.0)) return std::nullopt;
    return BasePoint{x0, x1, m};
}

BasePoint find_ft_plus_base(const Tolerances& tol) {
    if (auto b = check_ft_plus({0.5, 0.8}, {0.3, 0.6}, tol)) return *b;
    std::optional<BasePoint> best;
    constexpr double kStep = 0.125;
    for (int a = -8; a <= 16; ++a) {
        for (int b = 1; b <= 16; ++b) {
            for (int c = -8; c <= 16; ++c) {
                for (int d = 1; d <= 16; ++d) {
                    const auto cand = check_ft_plus({a * kStep, b * kStep}, {c * kStep, d * kStep}, tol);
                    if (cand && (!best || cand->min_imag > best->min_imag)) best = cand;
                }
            }
        }
    }
    if (!best) throw Error(ErrorCode::DegenerateFT, "no base point with all five coordinates in the upper half plane");
    return *best;
}

PqCheck verify_pq_pattern(const Windings& w, const BasePoint& base, const Tolerances& tol) {
    PqCheck out;
    out.expected = expected_pq(w);
    const LiftedFiveTuple start(base.x0, base.x1, {}, {}, tol);
    const LiftedFiveTuple end = lift_path(composite_loop(base.x0, base.x1, w), start, 1, tol);
    for (std::size_t i = 0; i < 5; ++i) {
        out.actual[i] = {end.p()[i], end.q()[i]};
        if (out.actual[i] != out.expected[i]) {
            out.diff += "x" + std::to_string(i) + ": expected (" + std::to_string(out.expected[i].first) + ", " +
                        std::to_string(out.expected[i].second) + "), got (" + std::to_string(out.actual[i].first) +
                        ", " + std::to_string(out.actual[i].second) + "); ";
        }
    }
    out.match = out.diff.empty();
    out.five_term_sum = five_term_sum_along(end, tol);
    return out;
}

}  // namespace ccs
