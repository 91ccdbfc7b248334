#include "ccs/bar_complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "ccs/errors.hpp"

namespace ccs {

std::int64_t ElementRegistry::bucket(const GroupElement& g) const {
    const double cell = std::max(1e-4, 1e3 * tol_);
    return static_cast<std::int64_t>(std::floor(g.a().real() / cell));
}

std::size_t ElementRegistry::intern(const GroupElement& g) {
    const std::int64_t b = bucket(g);
    for (std::int64_t k = b - 1; k <= b + 1; ++k) {
        auto [lo, hi] = buckets_.equal_range(k);
        for (auto it = lo; it != hi; ++it) {
            if (elements_[it->second].approx_equal(g, tol_)) return it->second;
        }
    }
    elements_.push_back(g);
    buckets_.emplace(b, elements_.size() - 1);
    return elements_.size() - 1;
}

namespace {

void check_degree(int degree) {
    if (degree < 0 || degree > kMaxDegree) {
        throw Error(ErrorCode::DegreeError, "chain degree " + std::to_string(degree) + " outside 0..4");
    }
}

using Key = std::vector<std::size_t>;

// Merges terms with identical interned keys, keeping first-appearance order.
template <typename Term, typename Getter>
std::vector<Term> merge_terms(const std::vector<Term>& in, Getter elements_of, double tol) {
    ElementRegistry reg(tol);
    std::map<Key, std::size_t> slot;
    std::vector<Term> out;
    for (const auto& t : in) {
        if (t.coef == 0) continue;
        const auto& els = elements_of(t);
        Key key;
        key.reserve(els.size());
        for (const auto& g : els) key.push_back(reg.intern(g));
        auto [it, inserted] = slot.emplace(key, out.size());
        if (inserted) {
            out.push_back(t);
        } else {
            out[it->second].coef += t.coef;
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    return out;
}

}  // namespace

BarChain::BarChain(int degree) : degree_(degree) { check_degree(degree); }

BarChain::BarChain(int degree, std::vector<BarTerm> terms, const Tolerances& tol) : degree_(degree) {
    check_degree(degree);
    for (auto& t : terms) add(t.coef, std::move(t.symbol));
    *this = normalized(tol);
}

void BarChain::add(long coef, std::vector<GroupElement> symbol) {
    if (static_cast<int>(symbol.size()) != degree_) {
        throw Error(ErrorCode::DegreeError, "bar symbol length does not match chain degree");
    }
    if (coef != 0) terms_.push_back({coef, std::move(symbol)});
}

BarChain& BarChain::operator+=(const BarChain& o) {
    if (o.degree_ != degree_) throw Error(ErrorCode::DegreeError, "adding chains of different degree");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

BarChain& BarChain::operator-=(const BarChain& o) { return *this += o.scaled(-1); }

BarChain BarChain::scaled(long k) const {
    BarChain out(degree_);
    for (const auto& t : terms_) out.add(k * t.coef, t.symbol);
    return out;
}

BarChain BarChain::normalized(const Tolerances& tol) const {
    BarChain out(degree_);
    out.terms_ = merge_terms(terms_, [](const BarTerm& t) -> const auto& { return t.symbol; }, tol.cmp);
    return out;
}

HomChain::HomChain(int degree, bool coinvariant) : degree_(degree), coinvariant_(coinvariant) {
    check_degree(degree);
}

HomChain::HomChain(int degree, std::vector<HomTerm> terms, bool coinvariant, const Tolerances& tol)
    : degree_(degree), coinvariant_(coinvariant) {
    check_degree(degree);
    for (auto& t : terms) add(t.coef, std::move(t.tuple));
    *this = normalized(tol);
}

void HomChain::add(long coef, std::vector<GroupElement> tuple) {
    if (static_cast<int>(tuple.size()) != degree_ + 1) {
        throw Error(ErrorCode::DegreeError, "tuple length does not match chain degree");
    }
    if (coef == 0) return;
    if (coinvariant_) tuple = canonical_tuple(tuple);
    terms_.push_back({coef, std::move(tuple)});
}

HomChain& HomChain::operator+=(const HomChain& o) {
    if (o.degree_ != degree_) throw Error(ErrorCode::DegreeError, "adding chains of different degree");
    for (const auto& t : o.terms_) add(t.coef, t.tuple);
    return *this;
}

HomChain& HomChain::operator-=(const HomChain& o) {
    if (o.degree_ != degree_) throw Error(ErrorCode::DegreeError, "subtracting chains of different degree");
    for (const auto& t : o.terms_) add(-t.coef, t.tuple);
    return *this;
}

HomChain HomChain::normalized(const Tolerances& tol) const {
    HomChain out(degree_, coinvariant_);
    out.terms_ = merge_terms(terms_, [](const HomTerm& t) -> const auto& { return t.tuple; }, tol.cmp);
    return out;
}

std::vector<GroupElement> canonical_tuple(const std::vector<GroupElement>& tuple) {
    if (tuple.empty()) return tuple;
    const GroupElement inv = tuple.front().inverse();
    std::vector<GroupElement> out;
    out.reserve(tuple.size());
    out.push_back(GroupElement::identity());
    for (std::size_t i = 1; i < tuple.size(); ++i) out.push_back(inv * tuple[i]);
    return out;
}

namespace {

std::vector<GroupElement> bar_to_tuple(const std::vector<GroupElement>& symbol) {
    std::vector<GroupElement> t;
    t.reserve(symbol.size() + 1);
    t.push_back(GroupElement::identity());
    for (const auto& g : symbol) t.push_back(t.back() * g);
    return t;
}

}  // namespace

HomChain inhom_to_hom(const BarChain& c, const Tolerances& tol) {
    HomChain out(c.degree(), true);
    for (const auto& t : c.terms()) out.add(t.coef, bar_to_tuple(t.symbol));
    return out.normalized(tol);
}

BarChain hom_to_inhom(const HomChain& c, const Tolerances& tol) {
    BarChain out(c.degree());
    for (const auto& t : c.terms()) {
        std::vector<GroupElement> symbol;
        symbol.reserve(t.tuple.size() - 1);
        for (std::size_t i = 1; i < t.tuple.size(); ++i) symbol.push_back(t.tuple[i - 1].inverse() * t.tuple[i]);
        out.add(t.coef, std::move(symbol));
    }
    return out.normalized(tol);
}

BarChain bar_boundary(const BarChain& c, const Tolerances& tol) {
    const int n = c.degree();
    if (n < 1) throw Error(ErrorCode::DegreeError, "boundary of a degree-0 chain");
    BarChain out(n - 1);
    for (const auto& t : c.terms()) {
        const auto& g = t.symbol;
        out.add(t.coef, std::vector<GroupElement>(g.begin() + 1, g.end()));
        for (int i = 1; i < n; ++i) {
            std::vector<GroupElement> s;
            s.reserve(static_cast<std::size_t>(n - 1));
            for (int k = 0; k < n; ++k) {
                if (k == i - 1) {
                    s.push_back(g[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(k + 1)]);
                    ++k;
                } else {
                    s.push_back(g[static_cast<std::size_t>(k)]);
                }
            }
            out.add((i % 2 == 0 ? 1 : -1) * t.coef, std::move(s));
        }
        out.add((n % 2 == 0 ? 1 : -1) * t.coef, std::vector<GroupElement>(g.begin(), g.end() - 1));
    }
    return out.normalized(tol);
}

HomChain hom_boundary(const HomChain& c, const Tolerances& tol) {
    const int n = c.degree();
    if (n < 1) throw Error(ErrorCode::DegreeError, "boundary of a degree-0 chain");
    HomChain out(n - 1, c.coinvariant());
    for (const auto& t : c.terms()) {
        for (int i = 0; i <= n; ++i) {
            std::vector<GroupElement> face;
            face.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k <= n; ++k) {
                if (k != i) face.push_back(t.tuple[static_cast<std::size_t>(k)]);
            }
            out.add((i % 2 == 0 ? 1 : -1) * t.coef, std::move(face));
        }
    }
    return out.normalized(tol);
}

CycleCheck is_cycle(const BarChain& c, const Tolerances& tol) {
    if (c.degree() == 0) return {true, BarChain(0)};
    BarChain residual = bar_boundary(c, tol);
    const bool ok = residual.empty();
    return {ok, std::move(residual)};
}

namespace {

template <typename Pred>
GoodnessReport scan_pairs(const std::vector<std::vector<GroupElement>>& tuples, Pred bad) {
    GoodnessReport r{true, {}};
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& tup = tuples[t];
        for (std::size_t i = 0; i < tup.size(); ++i) {
            for (std::size_t j = i + 1; j < tup.size(); ++j) {
                if (bad(tup[i], tup[j])) {
                    r.good = false;
                    r.offending.push_back({t, i, j});
                }
            }
        }
    }
    return r;
}

std::vector<std::vector<GroupElement>> tuples_of(const HomChain& c) {
    std::vector<std::vector<GroupElement>> out;
    for (const auto& t : c.terms()) out.push_back(t.tuple);
    return out;
}

std::vector<std::vector<GroupElement>> tuples_of(const BarChain& c) {
    std::vector<std::vector<GroupElement>> out;
    for (const auto& t : c.terms()) out.push_back(bar_to_tuple(t.symbol));
    return out;
}

bool v_bad(const GroupElement& gi, const GroupElement& gj, const ProjVector& v, const Tolerances& tol) {
    const ProjVector a = gi * v;
    const ProjVector b = gj * v;
    return !(std::abs(det_pair(a, b)) > tol.vgood * a.norm() * b.norm());
}

}  // namespace

GoodnessReport is_good(const HomChain& c, const Tolerances& tol) {
    return scan_pairs(tuples_of(c), [&](const GroupElement& a, const GroupElement& b) {
        return a.approx_equal_up_to_sign(b, tol.cmp);
    });
}

GoodnessReport is_good(const BarChain& c, const Tolerances& tol) {
    return scan_pairs(tuples_of(c), [&](const GroupElement& a, const GroupElement& b) {
        return a.approx_equal_up_to_sign(b, tol.cmp);
    });
}

GoodnessReport is_v_good(const HomChain& c, const ProjVector& v, const Tolerances& tol) {
    return scan_pairs(tuples_of(c), [&](const GroupElement& a, const GroupElement& b) { return v_bad(a, b, v, tol); });
}

GoodnessReport is_v_good(const BarChain& c, const ProjVector& v, const Tolerances& tol) {
    return scan_pairs(tuples_of(c), [&](const GroupElement& a, const GroupElement& b) { return v_bad(a, b, v, tol); });
}

GenericVector sample_generic_v(const HomChain& c, std::uint64_t seed, const Tolerances& tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto disc_point = [&]() {
        while (true) {
            const cplx z(unit(rng), unit(rng));
            if (std::norm(z) <= 1.0) return z;
        }
    };
    for (int attempt = 1; attempt <= kMaxSamplingAttempts; ++attempt) {
        const cplx v1 = disc_point();
        const cplx v2 = disc_point();
        if (!(std::max(std::abs(v1), std::abs(v2)) > tol.zero)) continue;
        const ProjVector v(v1, v2, tol);
        if (is_v_good(c, v, tol).good) return {v, attempt};
    }
    throw Error(ErrorCode::SamplingExhausted,
                "no v-good vector after " + std::to_string(kMaxSamplingAttempts) + " attempts");
}

HomChain cone(const GroupElement& g, const HomChain& c) {
    if (c.degree() + 1 > kMaxDegree) throw Error(ErrorCode::DegreeError, "cone exceeds the degree cap");
    HomChain out(c.degree() + 1, false);
    for (const auto& t : c.terms()) {
        std::vector<GroupElement> tuple;
        tuple.reserve(t.tuple.size() + 1);
        tuple.push_back(g);
        tuple.insert(tuple.end(), t.tuple.begin(), t.tuple.end());
        out.add(t.coef, std::move(tuple));
    }
    return out;
}

GroupElement random_group_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (true) {
        const cplx a(unit(rng), unit(rng));
        const cplx b(unit(rng), unit(rng));
        const cplx c(unit(rng), unit(rng));
        const cplx d(unit(rng), unit(rng));
        const cplx det = a * d - b * c;
        if (std::abs(det) < 0.25) continue;
        return GroupElement(a, b / det, c, d / det);
    }
}

GroupElement random_real_group_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (true) {
        const double a = unit(rng);
        const double b = unit(rng);
        const double c = unit(rng);
        const double d = unit(rng);
        const double det = a * d - b * c;
        if (std::abs(det) < 0.25) continue;
        return GroupElement(a, b / det, c, d / det);
    }
}

namespace {

using IdChain = std::map<Key, long>;

void accumulate(IdChain& into, const Key& k, long coef) {
    if (coef == 0) return;
    long& slot = into[k];
    slot += coef;
    if (slot == 0) into.erase(k);
}

// Works on interned ids throughout so that equal elements are matched exactly once.
class Repairer {
public:
    Repairer(std::uint64_t seed, const Tolerances& tol) : reg_(tol.cmp), rng_(seed), tol_(tol) {
        one_ = reg_.intern(GroupElement::identity());
    }

    std::size_t intern(const GroupElement& g) { return reg_.intern(g); }
    const GroupElement& at(std::size_t id) const { return reg_.at(id); }
    std::size_t one() const { return one_; }
    std::size_t samples() const { return samples_; }

    // Canonical form of a tuple; `left` receives the id of its first entry.
    Key canonical(const Key& t, std::size_t& left) {
        left = t.front();
        const std::size_t inv = inverse(left);
        Key out;
        out.reserve(t.size());
        for (std::size_t x : t) out.push_back(product(inv, x));
        out.front() = one_;
        return out;
    }

    IdChain canonicalize(const IdChain& c) {
        IdChain out;
        std::size_t left = 0;
        for (const auto& [k, coef] : c) accumulate(out, canonical(k, left), coef);
        return out;
    }

    IdChain phi_any(const Key& t) {
        std::size_t left = 0;
        const Key can = canonical(t, left);
        return translate(left, phi(can));
    }

    IdChain homotopy_any(const Key& t) {
        std::size_t left = 0;
        const Key can = canonical(t, left);
        return translate(left, homotopy(can));
    }

private:
    std::size_t product(std::size_t g, std::size_t h) {
        if (g == one_) return h;
        if (h == one_) return g;
        const auto key = std::make_pair(g, h);
        if (auto it = products_.find(key); it != products_.end()) return it->second;
        const std::size_t id = reg_.intern(reg_.at(g) * reg_.at(h));
        products_.emplace(key, id);
        return id;
    }

    std::size_t inverse(std::size_t g) {
        if (auto it = inverses_.find(g); it != inverses_.end()) return it->second;
        const std::size_t id = reg_.intern(reg_.at(g).inverse());
        inverses_.emplace(g, id);
        return id;
    }

    IdChain translate(std::size_t left, const IdChain& c) {
        if (left == one_) return c;
        IdChain out;
        for (const auto& [k, coef] : c) {
            Key moved;
            moved.reserve(k.size());
            for (std::size_t x : k) moved.push_back(product(left, x));
            accumulate(out, moved, coef);
        }
        return out;
    }

    static IdChain boundary_faces(const Key& t, const std::function<IdChain(const Key&)>& f) {
        IdChain out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            Key face;
            face.reserve(t.size() - 1);
            for (std::size_t k = 0; k < t.size(); ++k) {
                if (k != i) face.push_back(t[k]);
            }
            const long sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& [k, coef] : f(face)) accumulate(out, k, sign * coef);
        }
        return out;
    }

    std::size_t generic_cone_point(const IdChain& avoid) {
        std::vector<std::size_t> ids;
        for (const auto& [k, c] : avoid) ids.insert(ids.end(), k.begin(), k.end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        constexpr double kMargin = 1e-3;
        for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
            const GroupElement g = random_group_element(rng_);
            ++samples_;
            const bool clear = std::none_of(ids.begin(), ids.end(), [&](std::size_t id) {
                return g.approx_equal_up_to_sign(reg_.at(id), kMargin);
            });
            if (clear) return reg_.intern(g);
        }
        throw Error(ErrorCode::RepairFailed, "could not draw a generic cone point");
    }

    // phi(t) = cone(g_t, phi(boundary t)) on canonical tuples; phi is the identity in degree 0.
    const IdChain& phi(const Key& t) {
        if (auto it = phi_memo_.find(t); it != phi_memo_.end()) return it->second;
        IdChain result;
        if (t.size() == 1) {
            result[t] = 1;
        } else {
            const IdChain bd = boundary_faces(t, [this](const Key& f) { return phi_any(f); });
            const std::size_t g = generic_cone_point(bd);
            for (const auto& [k, coef] : bd) {
                Key coned;
                coned.reserve(k.size() + 1);
                coned.push_back(g);
                coned.insert(coned.end(), k.begin(), k.end());
                accumulate(result, coned, coef);
            }
        }
        return phi_memo_.emplace(t, std::move(result)).first->second;
    }

    // D(t) = cone(1, phi(t) - t - D(boundary t)); D vanishes in degree 0.
    const IdChain& homotopy(const Key& t) {
        if (auto it = d_memo_.find(t); it != d_memo_.end()) return it->second;
        IdChain result;
        if (t.size() > 1) {
            IdChain x = phi(t);
            accumulate(x, t, -1);
            const IdChain dd = boundary_faces(t, [this](const Key& f) { return homotopy_any(f); });
            for (const auto& [k, coef] : dd) accumulate(x, k, -coef);
            for (const auto& [k, coef] : x) {
                Key coned;
                coned.reserve(k.size() + 1);
                coned.push_back(one_);
                coned.insert(coned.end(), k.begin(), k.end());
                accumulate(result, coned, coef);
            }
        }
        return d_memo_.emplace(t, std::move(result)).first->second;
    }

    ElementRegistry reg_;
    std::mt19937_64 rng_;
    Tolerances tol_;
    std::size_t one_ = 0;
    std::size_t samples_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> products_;
    std::map<std::size_t, std::size_t> inverses_;
    std::map<Key, IdChain> phi_memo_;
    std::map<Key, IdChain> d_memo_;
};

HomChain to_hom_chain(const IdChain& c, int degree, const Repairer& r, const Tolerances& tol) {
    HomChain out(degree, true);
    for (const auto& [k, coef] : c) {
        std::vector<GroupElement> tuple;
        tuple.reserve(k.size());
        for (std::size_t id : k) tuple.push_back(r.at(id));
        out.add(coef, std::move(tuple));
    }
    return out.normalized(tol);
}

}  // namespace

RepairResult repair_to_good(const BarChain& cycle, std::uint64_t seed, const Tolerances& tol) {
    const int n = cycle.degree();
    if (n < 1 || n + 1 > kMaxDegree) {
        throw Error(ErrorCode::DegreeError, "repair needs a cycle of degree 1..3");
    }
    if (!is_cycle(cycle, tol).is_cycle) throw Error(ErrorCode::NotCycle, "repair input is not a cycle");

    Repairer rep(seed, tol);
    const HomChain hom = inhom_to_hom(cycle, tol);
    IdChain sigma;
    for (const auto& t : hom.terms()) {
        Key k;
        for (const auto& g : t.tuple) k.push_back(rep.intern(g));
        accumulate(sigma, k, t.coef);
    }

    IdChain image;
    IdChain homotopy;
    for (const auto& [k, coef] : sigma) {
        for (const auto& [k2, c2] : rep.phi_any(k)) accumulate(image, k2, coef * c2);
        for (const auto& [k2, c2] : rep.homotopy_any(k)) accumulate(homotopy, k2, coef * c2);
    }

    RepairResult r{BarChain(n), HomChain(n, true), HomChain(n + 1, true), rep.samples()};
    r.hom = to_hom_chain(rep.canonicalize(image), n, rep, tol);
    r.homotopy = to_hom_chain(rep.canonicalize(homotopy), n + 1, rep, tol);
    r.cycle = hom_to_inhom(r.hom, tol);
    return r;
}

bool verify_homotopy(const BarChain& original, const RepairResult& r, const Tolerances& tol) {
    HomChain diff = hom_boundary(r.homotopy, tol);
    diff -= r.hom;
    diff += inhom_to_hom(original, tol);
    return diff.normalized(tol).empty();
}

BarChain torsion_cycle(int n) {
    if (n < 1) throw Error(ErrorCode::DegreeError, "torsion order must be positive");
    const GroupElement t = rotation(n, 1);
    BarChain out(3);
    for (int i = 0; i < n; ++i) out.add(1, {t, rotation(n, i), t});
    return out;
}

BarChain conjugate(const BarChain& c, const GroupElement& g) {
    const GroupElement gi = g.inverse();
    BarChain out(c.degree());
    for (const auto& t : c.terms()) {
        std::vector<GroupElement> s;
        for (const auto& h : t.symbol) s.push_back(g * h * gi);
        out.add(t.coef, std::move(s));
    }
    return out;
}

BarChain complex_conjugate(const BarChain& c) {
    BarChain out(c.degree());
    for (const auto& t : c.terms()) {
        std::vector<GroupElement> s;
        for (const auto& h : t.symbol) s.push_back(h.conj());
        out.add(t.coef, std::move(s));
    }
    return out;
}

}  // namespace ccs
