#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "markovpass/bits.hpp"
#include "markovpass/corpus.hpp"
#include "markovpass/huffman.hpp"
#include "markovpass/markov.hpp"
#include "markovpass/parallel.hpp"
#include "markovpass/random.hpp"

namespace markovpass {

/// Seed text whose first k characters form the default initial state.
inline constexpr std::u32string_view kDefaultStart = U"The ";

/// Order-k model: one CodeTree per state plus the state generation starts
/// from. Immutable after construction and safe to share between threads.
class Model {
public:
    using Trees = std::unordered_map<std::u32string, CodeTree>;

    Model(std::size_t order, std::u32string initial_state, Trees trees, std::size_t corpus_length,
          std::string source_fingerprint);

    std::size_t order() const noexcept { return order_; }
    const std::u32string& initial_state() const noexcept { return initial_state_; }
    const Trees& trees() const noexcept { return trees_; }
    std::size_t state_count() const noexcept { return trees_.size(); }
    std::size_t corpus_length() const noexcept { return corpus_length_; }
    const std::string& source_fingerprint() const noexcept { return source_fingerprint_; }

    /// nullptr for an unknown state.
    const CodeTree* tree(std::u32string_view state) const;

private:
    std::size_t order_;
    std::u32string initial_state_;
    Trees trees_;
    std::size_t corpus_length_;
    std::string source_fingerprint_;
};

/// Builds the table and one tree per state. Without `start` the initial
/// state is the first k characters of "The " (k <= 4 only).
///
/// Errors: corpus-too-short, order-exceeds-default-start,
/// start-state-not-found.
Model build_model(const Corpus& corpus, std::size_t k, std::optional<std::u32string> start = std::nullopt,
                  Execution exec = Execution::Parallel);

/// Same, from an already-built table.
Model build_model(const TransitionTable& table, std::size_t corpus_length, std::string fingerprint,
                  std::optional<std::u32string> start = std::nullopt, Execution exec = Execution::Parallel);

/// Generation by Huffman decoding.
///
/// Emits the initial state, then, while real bits remain at the top of the
/// loop, walks the current state's tree and appends the leaf. The last walk
/// may be finished by the stream's zero padding; deterministic transitions
/// after the final real bit are not emitted. On return bits.consumed() ==
/// bits.size().
///
/// Throws DeterministicCycle if more than corpus_length() zero-bit steps
/// happen in a row while real bits remain.
std::u32string decode(const Model& model, BitStream& bits);
std::u32string decode(const Model& model, const BitString& bits);

/// Concatenated codewords of every transition in `text`. Left inverse of
/// decode up to the zero padding of the final walk.
///
/// Errors: bad-prefix (text does not start with the initial state),
/// unknown-transition.
BitString encode(const Model& model, std::u32string_view text);

/// encode(decode(bits)) starts with `bits` and is zero afterwards. Any codec
/// error counts as a failed round trip.
bool verify_roundtrip(const Model& model, const BitString& bits);

struct Generated {
    std::u32string password;
    BitString bits;
};

/// Draws n bits, decodes them and checks the round trip before returning.
/// Throws RoundTripFailed if the check fails.
Generated generate(const Model& model, std::size_t n, RandomSource& rng);

/// Batch kernels. Each entry is independent; the parallel path splits the
/// batch across OpenMP threads over the shared model.
std::vector<std::u32string> decode_batch(const Model& model, std::span<const BitString> inputs,
                                         Execution exec = Execution::Parallel);
std::size_t count_roundtrip_failures(const Model& model, std::span<const BitString> inputs,
                                     Execution exec = Execution::Parallel);

/// `count` passwords of n bits each. Bits are drawn serially from `rng`
/// (in order, so seeded runs are reproducible); decoding and verification
/// run through the batch kernels.
std::vector<Generated> generate_batch(const Model& model, std::size_t n, std::size_t count, RandomSource& rng,
                                      Execution exec = Execution::Parallel);

}  // namespace markovpass
