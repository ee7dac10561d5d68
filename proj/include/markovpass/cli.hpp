#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "markovpass/codec.hpp"
#include "markovpass/markov.hpp"

namespace markovpass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCodec = 3;

/// Environment variable consulted when --corpus is not given.
inline constexpr const char* kCorpusEnv = "MARKOVPASS_CORPUS";

enum class Scheme { Markov, Chars, Words, Syllables };

struct RunConfig {
    std::optional<std::filesystem::path> corpus_path;
    std::size_t order = 2;
    std::size_t bits = 56;
    std::size_t count = 1;
    Scheme scheme = Scheme::Markov;
    std::optional<std::string> start_state;
    // Test-only. Makes output reproducible, so it is always flagged.
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> wordlist_path;
    bool show_bits = false;
    bool stats = false;
    std::optional<std::string> dump_state;
    std::optional<std::string> encode_text;
    std::optional<std::string> decode_bits;
};

struct ModelStats {
    std::size_t order = 0;
    std::size_t states = 0;
    std::uint64_t transitions = 0;
    std::size_t min_branching = 0;
    std::size_t max_branching = 0;
    std::size_t deterministic_states = 0;
    /// Expected codeword length per emitted character, weighted by the
    /// corpus transition counts.
    double mean_bits_per_char = 0.0;
};

ModelStats model_stats(const TransitionTable& table, const Model& model);

void print_stats(std::ostream& out, const ModelStats& stats, const Model& model);

/// Executes a parsed configuration. Passwords go to `out`, diagnostics to
/// `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and runs.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markovpass::cli
