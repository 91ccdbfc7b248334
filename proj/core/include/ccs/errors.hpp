#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

enum class ErrorCode {
    DeterminantError,
    ZeroVector,
    DegenerateTuple,
    LogOfZero,
    OnCut,
    ChiAtZero,
    NotEven,
    InvalidPoint,
    DegenerateFT,
    DegenerateConfig,
    DegreeError,
    SamplingExhausted,
    RepairFailed,
    NotVGood,
    NotCycle,
    NuNonzero,
    Incomparable,
    NotSortable,
    PreconditionFailed,
    PathDegenerate,
    SchemaError,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ccs
