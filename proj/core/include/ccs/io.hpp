#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ccs/bar_complex.hpp"
#include "ccs/ccs_pipeline.hpp"
#include "ccs/covering_paths.hpp"
#include "ccs/real_sl2.hpp"

namespace ccs {

using nlohmann::json;

struct Config {
    Tolerances tol;
    std::uint64_t seed = 0;
    int trials = kDefaultTrials;

    bool valid() const { return tol.valid() && trials >= 1; }
};

json to_json(cplx z);
cplx complex_from_json(const json& j);

// ((a, b), (c, d)) as [[re, im], [re, im], [re, im], [re, im]] in the order a, b, c, d.
json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j, const Tolerances& tol = kDefaultTol);

// {"group": "SL2C", "degree": n, "terms": [{"coef": k, "bar": [g1, ..., gn]}, ...]}
json to_json(const BarChain& c);
// Throws SchemaError, or DeterminantError naming the term index.
BarChain chain_from_json(const json& j, const Tolerances& tol = kDefaultTol);

// [{"coef": k, "z": [re, im], "p": p, "q": q}, ...]
json to_json(const PreBlochElement& e);
PreBlochElement pre_bloch_from_json(const json& j, const Tolerances& tol = kDefaultTol);

json to_json(const Config& c);
json to_json(const CcsReport& r, const Config& config);
json to_json(const FiveTermFixture& f);
json to_json(const PqCheck& c, const BasePoint& base, const Windings& w);
json to_json(const RealCheckSummary& s, std::uint64_t seed);

// Throws IoError if the file cannot be read, SchemaError if it is not valid JSON.
json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline; stdout when path is empty. Throws IoError.
void write_json(const json& j, const std::optional<std::filesystem::path>& path);

BarChain parse_cycle_file(const std::filesystem::path& path, const Tolerances& tol = kDefaultTol);
void emit_report(const CcsReport& r, const Config& config, const std::optional<std::filesystem::path>& path);

}  // namespace ccs
