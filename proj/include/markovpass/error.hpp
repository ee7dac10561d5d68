#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace markovpass {

enum class ErrorCode {
    // Configuration / input problems.
    FileNotFound,
    InvalidEncoding,
    EmptyAfterNormalization,
    CorpusTooShort,
    StartStateNotFound,
    OrderExceedsDefaultStart,
    EmptyWordlist,
    InvalidArgument,
    // Model / codec problems.
    EmptyDistribution,
    SymbolNotInTree,
    BadPrefix,
    UnknownTransition,
    DeterministicCycle,
    RngFailure,
    RoundTripFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by user-supplied configuration rather than by the
/// model or codec itself. The CLI maps these to distinct exit codes.
bool is_config_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace markovpass
