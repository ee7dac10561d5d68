#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "markovpass/corpus.hpp"
#include "markovpass/parallel.hpp"

namespace markovpass {

/// next character -> number of times it followed the state. Ordered so that
/// iteration (and everything derived from it) is deterministic.
using Distribution = std::map<char32_t, std::uint64_t>;

/// Order-k transition counts. Counts are exact integers; nothing is
/// smoothed or pruned.
class TransitionTable {
public:
    using Rows = std::map<std::u32string, Distribution, std::less<>>;

    TransitionTable(std::size_t order, Rows rows) : order_(order), rows_(std::move(rows)) {}

    std::size_t order() const noexcept { return order_; }
    const Rows& rows() const noexcept { return rows_; }
    std::size_t state_count() const noexcept { return rows_.size(); }

    /// nullptr when the state never occurred.
    const Distribution* find(std::u32string_view state) const;

    /// Sum of all counts. Equals the corpus length for circular builds.
    std::uint64_t total_count() const;

    /// Line-oriented UTF-8 dump: one `state<TAB>next:count ...` line per row,
    /// rows and successors in code point order. Identical tables serialize
    /// to identical bytes.
    std::string serialize() const;

    bool operator==(const TransitionTable&) const = default;

private:
    std::size_t order_;
    Rows rows_;
};

/// Exact multiset counts of the given windows. Every window state must have
/// length k (InvalidArgument otherwise).
TransitionTable build_table(std::span<const Window> windows, std::size_t k);

/// Streams the circular windows of `corpus` without materializing them.
/// The parallel path counts per-thread chunks and merges them.
TransitionTable build_table(const Corpus& corpus, std::size_t k, Execution exec = Execution::Parallel);

/// True iff for every (state, next) with a positive count, state[1..] + next
/// is itself a state, i.e. the chain can never walk into an unknown state.
bool state_closure_check(const TransitionTable& table);

}  // namespace markovpass
