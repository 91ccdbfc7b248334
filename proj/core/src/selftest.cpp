#include "ccs/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "ccs/ccs_pipeline.hpp"
#include "ccs/covering_paths.hpp"
#include "ccs/errors.hpp"
#include "ccs/polylog.hpp"
#include "ccs/real_sl2.hpp"
#include "ccs/seeding.hpp"

namespace ccs {

namespace {

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

ProjVector random_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return ProjVector(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)));
}

SelftestCheck rogers_relations(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.01, 0.99);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double x = u(rng);
        worst = std::max(worst, std::abs(rogers_L_real(x) + rogers_L_real(1.0 - x) + kPi2 / 6.0));
        double a = u(rng);
        double b = u(rng);
        if (a < b) std::swap(a, b);
        if (a - b < 1e-3) continue;
        const auto ft = five_tuple(a, b);
        double sum = 0.0;
        for (std::size_t i = 0; i < 5; ++i) sum += (i % 2 == 0 ? 1.0 : -1.0) * rogers_L_real(ft[i].real());
        worst = std::max(worst, std::abs(sum));
    }
    return {"rogers reflection and five-term", worst < 1e-9, "max residual " + fmt(worst)};
}

SelftestCheck chi_identity() {
    double worst = 0.0;
    for (long m = 1; m <= 12; ++m) {
        for (long k = 1; k < m; ++k) {
            const cplx v = scale_to_unit(lhat(chi_hat({k, m})));
            worst = std::max(worst, std::max(distance_mod1(v.real(), static_cast<double>(k) / m), std::abs(v.imag())));
        }
    }
    return {"chi_hat lands on k/m", worst < 1e-10, "max deviation " + fmt(worst)};
}

SelftestCheck flattening_and_shadow(std::mt19937_64& rng, const Tolerances& tol) {
    double flat = 0.0;
    double shadow = 0.0;
    bool symbolic = true;
    for (int k = 0; k < 50; ++k) {
        const std::array<ProjVector, 5> v = {random_vector(rng), random_vector(rng), random_vector(rng),
                                             random_vector(rng), random_vector(rng)};
        const auto faces = sigma_hat_faces(v, tol);
        const FlatteningReport rep = check_flattening_condition(std::span<const FlatteningTriple, 5>(faces), tol);
        flat = std::max(flat, rep.max_residual);
        symbolic = symbolic && rep.symbolic_zero.value_or(false);
        cplx sum = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            sum += (i % 2 == 0 ? 1.0 : -1.0) * lhat(to_covering_point(faces[i], tol), tol);
        }
        const double lattice = 2.0 * kPi2;
        shadow = std::max(shadow, std::abs(sum - lattice * std::round(sum.real() / lattice)));
    }
    const bool ok = flat < 1e-8 && symbolic && shadow < 1e-7;
    return {"flattening condition and five-term shadow", ok,
            "max edge residual " + fmt(flat) + ", symbolic " + (symbolic ? "exact" : "FAILED") +
                ", lhat sum off 2 pi^2 Z by " + fmt(shadow)};
}

SelftestCheck nu_sigma_mu(std::mt19937_64& rng, const Tolerances& tol) {
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
        const std::vector<ProjVector> v = {random_vector(rng), random_vector(rng), random_vector(rng),
                                           random_vector(rng)};
        const std::vector<LedgerTerm> ledger = {{1, sigma_hat(ConfigTuple(v, tol), position_atom, tol)}};
        WedgeElement boundary;
        for (std::size_t omit = 0; omit < 4; ++omit) {
            std::array<std::size_t, 3> idx{};
            std::vector<ProjVector> f;
            for (std::size_t i = 0, m = 0; i < 4; ++i) {
                if (i == omit) continue;
                idx[m++] = i;
                f.push_back(v[i]);
            }
            const LogDetLabeler global = [idx](std::size_t i, std::size_t j, cplx ld) {
                return position_atom(idx[i], idx[j], ld);
            };
            WedgeElement m = mu(f[0], f[1], f[2], global, tol);
            if (omit % 2 == 1) m *= -1;
            boundary += m;
        }
        if (!(nu_hat(ledger) == boundary)) ++bad;
    }
    return {"nu_hat o sigma_hat = mu o boundary", bad == 0, std::to_string(bad) + " of 50 configurations differ"};
}

SelftestCheck torsion_values(std::uint64_t seed, const Tolerances& tol) {
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const CcsReport r = ccs_value(torsion_cycle(n), seed, 3, tol);
        const double expected = std::fmod(1.0 - 2.0 / n, 1.0);
        const bool good = distance_mod1(r.value_mod1.real(), expected) < 1e-6 && std::abs(r.value_mod1.imag()) < 1e-6 &&
                          r.spread < 1e-7;
        ok = ok && good;
        detail += "n=" + std::to_string(n) + ": " + std::to_string(r.value_mod1.real()) + (good ? "" : " (bad)") + "; ";
    }
    return {"torsion cycle values -2/n mod 1", ok, detail};
}

SelftestCheck boundaries_vanish(std::mt19937_64& rng, std::uint64_t seed, const Tolerances& tol) {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        BarChain c4(4);
        c4.add(1, {random_group_element(rng), random_group_element(rng), random_group_element(rng),
                   random_group_element(rng)});
        const CcsReport r = ccs_value(bar_boundary(c4, tol), seed + static_cast<std::uint64_t>(k), 2, tol);
        worst = std::max({worst, distance_mod1(r.value_mod1.real(), 0.0), std::abs(r.value_mod1.imag())});
    }
    return {"boundaries evaluate to zero", worst < 1e-7, "max |value| " + fmt(worst)};
}

SelftestCheck chain_algebra(std::mt19937_64& rng, std::uint64_t seed, const Tolerances& tol) {
    bool ok = true;
    std::string detail;
    BarChain c4(4);
    for (int k = 0; k < 3; ++k) {
        c4.add(k + 1, {random_group_element(rng), random_group_element(rng), random_group_element(rng),
                       random_group_element(rng)});
    }
    if (!bar_boundary(bar_boundary(c4, tol), tol).empty()) {
        ok = false;
        detail += "boundary twice is nonzero; ";
    }
    const BarChain back = hom_to_inhom(inhom_to_hom(c4, tol), tol);
    BarChain diff = back;
    diff -= c4;
    if (!diff.normalized(tol).empty()) {
        ok = false;
        detail += "conversion round trip differs; ";
    }
    const BarChain t3 = torsion_cycle(3);
    const RepairResult rep = repair_to_good(t3, seed, tol);
    if (!verify_homotopy(t3, rep, tol) || !is_good(rep.hom, tol).good) {
        ok = false;
        detail += "repair certificate failed; ";
    }
    return {"chain algebra", ok, detail.empty() ? "boundary^2 = 0, conversions, repair homotopy" : detail};
}

SelftestCheck small_positive(std::uint64_t seed, const Tolerances& tol) {
    const RealCheckSummary s = run_real_check(100, seed, tol);
    return {"small positive agreement", s.passed == s.samples,
            std::to_string(s.passed) + "/" + std::to_string(s.samples) + " passed, max |lhat - L| " +
                fmt(s.max_agreement)};
}

SelftestCheck pq_pattern(std::mt19937_64& rng, const Tolerances& tol) {
    const BasePoint base = find_ft_plus_base(tol);
    std::uniform_int_distribution<int> w(-3, 3);
    int matched = 0;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const PqCheck c = verify_pq_pattern({w(rng), w(rng), w(rng), w(rng), w(rng)}, base, tol);
        matched += c.match ? 1 : 0;
        worst = std::max(worst, std::abs(c.five_term_sum));
    }
    return {"lifted loops match the closed form", matched == 10 && worst < 1e-8,
            std::to_string(matched) + "/10 matched, max five-term sum " + fmt(worst)};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, const Tolerances& tol) {
    std::uint64_t state = seed;
    std::mt19937_64 rng(splitmix64(state));
    std::vector<std::function<SelftestCheck()>> suites = {
        [&] { return rogers_relations(rng); },
        [&] { return chi_identity(); },
        [&] { return flattening_and_shadow(rng, tol); },
        [&] { return nu_sigma_mu(rng, tol); },
        [&] { return torsion_values(splitmix64(state), tol); },
        [&] { return boundaries_vanish(rng, splitmix64(state), tol); },
        [&] { return chain_algebra(rng, splitmix64(state), tol); },
        [&] { return small_positive(splitmix64(state), tol); },
        [&] { return pq_pattern(rng, tol); },
    };
    std::vector<SelftestCheck> out;
    for (const auto& suite : suites) {
        try {
            out.push_back(suite());
        } catch (const Error& e) {
            out.push_back({"(suite aborted)", false, e.what()});
        }
    }
    return out;
}

}  // namespace ccs
