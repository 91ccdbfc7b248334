#include "ccs/io.hpp"

#include <fstream>
#include <iostream>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema(where + ": missing \"" + key + "\"");
    return j.at(key);
}

long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) schema(where + ": expected an integer");
    return j.get<long>();
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema("expected [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const GroupElement& g) {
    json out = json::array();
    for (const cplx x : g.entries()) out.push_back(to_json(x));
    return out;
}

GroupElement group_element_from_json(const json& j, const Tolerances& tol) {
    if (!j.is_array() || j.size() != 4) schema("a matrix is four [re, im] pairs");
    return GroupElement(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
                        complex_from_json(j[3]), tol);
}

json to_json(const BarChain& c) {
    json terms = json::array();
    for (const auto& t : c.terms()) {
        json bar = json::array();
        for (const auto& g : t.symbol) bar.push_back(to_json(g));
        terms.push_back({{"coef", t.coef}, {"bar", std::move(bar)}});
    }
    return {{"group", "SL2C"}, {"degree", c.degree()}, {"terms", std::move(terms)}};
}

BarChain chain_from_json(const json& j, const Tolerances& tol) {
    if (field(j, "group", "chain") != "SL2C") schema("chain: group must be \"SL2C\"");
    const long degree = integer(field(j, "degree", "chain"), "chain degree");
    if (degree < 0 || degree > kMaxDegree) schema("chain: degree must lie in 0..4");
    const json& terms = field(j, "terms", "chain");
    if (!terms.is_array()) schema("chain: \"terms\" must be an array");
    BarChain out(static_cast<int>(degree));
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string where = "term " + std::to_string(k);
        const long coef = integer(field(terms[k], "coef", where), where + " coef");
        const json& bar = field(terms[k], "bar", where);
        if (!bar.is_array() || static_cast<long>(bar.size()) != degree) {
            schema(where + ": \"bar\" must list " + std::to_string(degree) + " matrices");
        }
        std::vector<GroupElement> symbol;
        for (std::size_t i = 0; i < bar.size(); ++i) {
            try {
                symbol.push_back(group_element_from_json(bar[i], tol));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DeterminantError) throw;
                const std::string what = e.what();
                throw Error(ErrorCode::DeterminantError,
                            where + ", matrix " + std::to_string(i) + ": " + what.substr(what.find(": ") + 2));
            }
        }
        out.add(coef, std::move(symbol));
    }
    return out;
}

json to_json(const PreBlochElement& e) {
    json out = json::array();
    for (const auto& t : e.terms()) {
        out.push_back({{"coef", t.coef}, {"z", to_json(t.point.z())}, {"p", t.point.p()}, {"q", t.point.q()}});
    }
    return out;
}

PreBlochElement pre_bloch_from_json(const json& j, const Tolerances& tol) {
    if (!j.is_array()) schema("pre-Bloch element must be an array of terms");
    PreBlochElement out(tol);
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string where = "term " + std::to_string(k);
        out.add(integer(field(j[k], "coef", where), where), CoveringPoint(complex_from_json(field(j[k], "z", where)),
                                                                          integer(field(j[k], "p", where), where),
                                                                          integer(field(j[k], "q", where), where), tol));
    }
    return out;
}

json to_json(const Config& c) {
    return {{"seed", c.seed},
            {"trials", c.trials},
            {"tolerances",
             {{"det", c.tol.det}, {"cmp", c.tol.cmp}, {"zero", c.tol.zero}, {"vgood", c.tol.vgood}, {"flat", c.tol.flat}}}};
}

json to_json(const CcsReport& r, const Config& config) {
    json trials = json::array();
    for (const auto& t : r.trials) {
        trials.push_back({{"seed", t.seed}, {"value", to_json(t.value_mod1)}, {"raw_lhat", to_json(t.raw_lhat)}});
    }
    return {{"quantity", "2*C2 mod 1"},
            {"note", "C2 itself is only determined mod 1/2 by this value"},
            {"value", to_json(r.value_mod1)},
            {"raw_lhat", to_json(r.raw_lhat)},
            {"volume", r.volume},
            {"terms", r.terms},
            {"spread", r.spread},
            {"residuals",
             {{"volume_vs_im_lhat", r.volume_residual},
              {"cross_ratio", r.max_crossratio_residual},
              {"nu_hat_exact", r.nu_exact}}},
            {"trials", std::move(trials)},
            {"seed", r.seed},
            {"config", to_json(config)}};
}

json to_json(const FiveTermFixture& f) {
    json faces = json::array();
    for (const auto& t : f.faces) faces.push_back({{"w0", to_json(t.w0())}, {"w1", to_json(t.w1())}, {"w2", to_json(t.w2())}});
    json residuals = json::object();
    for (std::size_t e = 0; e < f.flattening.residuals.size(); ++e) {
        residuals[FlatteningReport::kEdgeNames[e]] = f.flattening.residuals[e];
    }
    json out = {{"x", to_json(f.x)},
                {"y", to_json(f.y)},
                {"faces", std::move(faces)},
                {"relation", to_json(f.relation)},
                {"flattening", {{"residuals", std::move(residuals)}, {"max_residual", f.flattening.max_residual}, {"holds", f.flattening.holds}}},
                {"lhat_sum", to_json(f.lhat_sum)}};
    if (f.flattening.symbolic_zero) out["flattening"]["symbolic_zero"] = *f.flattening.symbolic_zero;
    return out;
}

json to_json(const PqCheck& c, const BasePoint& base, const Windings& w) {
    const auto pairs = [](const std::array<std::pair<long, long>, 5>& a) {
        json out = json::array();
        for (const auto& [p, q] : a) out.push_back({p, q});
        return out;
    };
    return {{"base", {to_json(base.x0), to_json(base.x1)}},
            {"windings", {{"p0", w.p0}, {"q0", w.q0}, {"r", w.r}, {"p1", w.p1}, {"q1", w.q1}}},
            {"lifted", pairs(c.actual)},
            {"closed_form", pairs(c.expected)},
            {"match", c.match},
            {"diff", c.diff},
            {"five_term_sum", to_json(c.five_term_sum)}};
}

json to_json(const RealCheckSummary& s, std::uint64_t seed) {
    return {{"seed", seed},
            {"samples", s.samples},
            {"passed", s.passed},
            {"rejected_triples", s.rejected},
            {"max_agreement", s.max_agreement},
            {"failures", s.failures}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
    }
}

void write_json(const json& j, const std::optional<std::filesystem::path>& path) {
    const std::string text = j.dump(2) + "\n";
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + path->string());
}

BarChain parse_cycle_file(const std::filesystem::path& path, const Tolerances& tol) {
    return chain_from_json(read_json_file(path), tol);
}

void emit_report(const CcsReport& r, const Config& config, const std::optional<std::filesystem::path>& path) {
    write_json(to_json(r, config), path);
}

}  // namespace ccs
