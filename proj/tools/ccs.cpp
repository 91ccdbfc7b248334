// ccs: command-line front end for the Cheeger-Chern-Simons evaluation pipeline.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "ccs/errors.hpp"
#include "ccs/io.hpp"
#include "ccs/polylog.hpp"
#include "ccs/selftest.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code(ccs::ErrorCode code) {
    switch (code) {
        case ccs::ErrorCode::IoError:
            return kExitIo;
        case ccs::ErrorCode::RepairFailed:
        case ccs::ErrorCode::SamplingExhausted:
        case ccs::ErrorCode::NuNonzero:
            return kExitNumeric;
        default:
            return kExitValidation;
    }
}

// "a", "bi", "a+bi", "a-bi" (also with j).
ccs::cplx parse_complex(const std::string& text) {
    static const std::regex re(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-]?\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*[ij])?\s*$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched)) {
        throw ccs::Error(ccs::ErrorCode::SchemaError, "cannot read \"" + text + "\" as a complex number");
    }
    const double real = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double imag = 0.0;
    if (m[2].matched) {
        std::string s = std::regex_replace(m[2].str(), std::regex(R"(\s)"), "");
        if (s.empty() || s == "+") s = "1";
        if (s == "-") s = "-1";
        imag = std::stod(s);
    }
    return {real, imag};
}

std::optional<std::filesystem::path> out_path(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cheeger-Chern-Simons class of SL(2,C) bar cycles via the extended Bloch group"};
    app.require_subcommand(1);
    app.fallthrough();

    ccs::Config config;
    std::string out;
    app.add_option("--tol-det", config.tol.det, "determinant tolerance")->capture_default_str();
    app.add_option("--tol-cmp", config.tol.cmp, "comparison tolerance")->capture_default_str();
    app.add_option("--tol-zero", config.tol.zero, "zero test tolerance")->capture_default_str();
    app.add_option("--tol-vgood", config.tol.vgood, "v-goodness threshold")->capture_default_str();
    app.add_option("--tol-flat", config.tol.flat, "flattening residual threshold")->capture_default_str();
    app.add_option("--out", out, "write JSON here instead of stdout");

    auto* eval = app.add_subcommand("eval", "evaluate 2*C2 mod 1 on a degree-3 cycle file");
    std::string cycle_file;
    double spread_limit = 1e-7;
    eval->add_option("cycle", cycle_file, "cycle JSON file")->required();
    eval->add_option("--seed", config.seed, "seed")->capture_default_str();
    eval->add_option("--trials", config.trials, "independent (v, repair) trials")->capture_default_str();
    eval->add_option("--tolerance", spread_limit, "largest allowed spread across trials")->capture_default_str();

    auto* check = app.add_subcommand("check-cycle", "validate a chain file and test the cycle condition");
    check->add_option("cycle", cycle_file, "chain JSON file")->required();

    auto* torsion = app.add_subcommand("torsion", "emit the cycle sum_i [t|t^i|t] for the rotation of order n");
    int order = 3;
    torsion->add_option("--n", order, "rotation order")->required()->check(CLI::PositiveNumber);

    auto* five = app.add_subcommand("five-term", "emit and verify the five-term fixture over five_tuple(x, y)");
    std::string x_text = "0.3+0.4i";
    std::string y_text = "0.6+0.2i";
    five->add_option("--x", x_text, "x as a+bi")->capture_default_str();
    five->add_option("--y", y_text, "y as a+bi")->capture_default_str();

    auto* real = app.add_subcommand("real-check", "termwise agreement of lhat and L on small positive triples");
    int samples = 500;
    real->add_option("--samples", samples, "number of triples")->capture_default_str()->check(CLI::PositiveNumber);
    real->add_option("--seed", config.seed, "seed")->capture_default_str();

    auto* lift = app.add_subcommand("lift-path", "lift the composite loop and compare with the closed form");
    ccs::Windings w;
    std::string base_text;
    lift->add_option("--p0", w.p0)->capture_default_str();
    lift->add_option("--q0", w.q0)->capture_default_str();
    lift->add_option("--r", w.r)->capture_default_str();
    lift->add_option("--p1", w.p1)->capture_default_str();
    lift->add_option("--q1", w.q1)->capture_default_str();
    lift->add_option("--base", base_text, "base point x0,x1 (each a+bi); searched when omitted");

    auto* self = app.add_subcommand("selftest", "run the reduced property suites");
    self->add_option("--seed", config.seed, "seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config.valid()) {
            std::cerr << "tolerances must be positive and trials at least 1\n";
            return kExitValidation;
        }
        const auto& tol = config.tol;
        if (*eval) {
            const ccs::BarChain c = ccs::parse_cycle_file(cycle_file, tol);
            const ccs::CcsReport r = ccs::ccs_value(c, config.seed, config.trials, tol);
            ccs::emit_report(r, config, out_path(out));
            if (r.spread > spread_limit) {
                std::cerr << "trial spread " << r.spread << " exceeds " << spread_limit << "\n";
                return kExitNumeric;
            }
        } else if (*check) {
            const ccs::BarChain c = ccs::parse_cycle_file(cycle_file, tol);
            const ccs::CycleCheck cc = ccs::is_cycle(c, tol);
            ccs::json j = {{"degree", c.degree()},
                           {"terms", c.terms().size()},
                           {"is_cycle", cc.is_cycle},
                           {"good", ccs::is_good(c, tol).good}};
            if (!cc.is_cycle) j["boundary"] = ccs::to_json(cc.residual);
            ccs::write_json(j, out_path(out));
            if (!cc.is_cycle) return kExitValidation;
        } else if (*torsion) {
            ccs::write_json(ccs::to_json(ccs::torsion_cycle(order)), out_path(out));
        } else if (*five) {
            const ccs::FiveTermFixture f = ccs::five_term_fixture(parse_complex(x_text), parse_complex(y_text), tol);
            ccs::write_json(ccs::to_json(f), out_path(out));
            const double lattice = 2.0 * ccs::kPi2;
            const double off = std::abs(f.lhat_sum - lattice * std::round(f.lhat_sum.real() / lattice));
            if (!f.flattening.holds || !f.flattening.symbolic_zero.value_or(false) || off > 1e-7) {
                return kExitNumeric;
            }
        } else if (*real) {
            const ccs::RealCheckSummary s = ccs::run_real_check(samples, config.seed, tol);
            ccs::write_json(ccs::to_json(s, config.seed), out_path(out));
            if (s.passed != s.samples) return kExitNumeric;
        } else if (*lift) {
            ccs::BasePoint base;
            if (base_text.empty()) {
                base = ccs::find_ft_plus_base(tol);
            } else {
                const auto comma = base_text.find(',');
                if (comma == std::string::npos) throw ccs::Error(ccs::ErrorCode::SchemaError, "--base needs x0,x1");
                const auto b = ccs::check_ft_plus(parse_complex(base_text.substr(0, comma)),
                                                  parse_complex(base_text.substr(comma + 1)), tol);
                if (!b) {
                    throw ccs::Error(ccs::ErrorCode::DegenerateFT, "base point does not have all coordinates in the upper half plane");
                }
                base = *b;
            }
            const ccs::PqCheck c = ccs::verify_pq_pattern(w, base, tol);
            ccs::write_json(ccs::to_json(c, base, w), out_path(out));
            if (!c.match || std::abs(c.five_term_sum) > 1e-8) return kExitNumeric;
        } else if (*self) {
            bool ok = true;
            for (const auto& c : ccs::run_selftest(config.seed, tol)) {
                std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
                ok = ok && c.passed;
            }
            if (!ok) return kExitNumeric;
        }
    } catch (const ccs::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.code());
    }
    return 0;
}
