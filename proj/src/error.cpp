#include "markovpass/error.hpp"

namespace markovpass {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::FileNotFound: return "file-not-found";
    case ErrorCode::InvalidEncoding: return "invalid-encoding";
    case ErrorCode::EmptyAfterNormalization: return "empty-after-normalization";
    case ErrorCode::CorpusTooShort: return "corpus-too-short";
    case ErrorCode::StartStateNotFound: return "start-state-not-found";
    case ErrorCode::OrderExceedsDefaultStart: return "order-exceeds-default-start";
    case ErrorCode::EmptyWordlist: return "empty-wordlist";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::EmptyDistribution: return "empty-distribution";
    case ErrorCode::SymbolNotInTree: return "symbol-not-in-tree";
    case ErrorCode::BadPrefix: return "bad-prefix";
    case ErrorCode::UnknownTransition: return "unknown-transition";
    case ErrorCode::DeterministicCycle: return "deterministic-cycle";
    case ErrorCode::RngFailure: return "rng-failure";
    case ErrorCode::RoundTripFailed: return "round-trip-failed";
    }
    return "unknown-error";
}

bool is_config_error(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::FileNotFound:
    case ErrorCode::InvalidEncoding:
    case ErrorCode::EmptyAfterNormalization:
    case ErrorCode::CorpusTooShort:
    case ErrorCode::StartStateNotFound:
    case ErrorCode::OrderExceedsDefaultStart:
    case ErrorCode::EmptyWordlist:
    case ErrorCode::InvalidArgument:
        return true;
    default:
        return false;
    }
}

}  // namespace markovpass
