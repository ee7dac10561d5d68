#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markovpass/bits.hpp"
#include "markovpass/markov.hpp"

namespace markovpass {

/// Huffman tree over one state's successor distribution.
///
/// Construction is fully deterministic. The queue is ordered by
/// (weight, smallest code point in the subtree); of the two nodes removed
/// per merge, the first becomes the left child. Left is bit 0, right is
/// bit 1, and codewords are the root-to-leaf path in walk order.
class CodeTree {
public:
    struct Node {
        std::uint64_t weight = 0;
        char32_t symbol = 0;       // leaves only
        char32_t min_symbol = 0;   // smallest symbol in the subtree
        std::int32_t left = -1;    // -1 for leaves
        std::int32_t right = -1;

        bool is_leaf() const noexcept { return left < 0; }
    };

    struct Step {
        char32_t symbol;
        std::size_t bits_consumed;
    };

    /// Throws EmptyDistribution for an empty map or a zero count.
    static CodeTree build(const Distribution& dist);

    /// Walks from the root (0 = left, 1 = right) until a leaf. A single-leaf
    /// tree reads nothing.
    Step traverse(BitStream& bits) const;

    /// Root-to-leaf path for `symbol`; throws SymbolNotInTree.
    const BitString& codeword(char32_t symbol) const;

    bool contains(char32_t symbol) const noexcept;

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t root() const noexcept { return root_; }
    std::size_t leaf_count() const noexcept { return codes_.size(); }

    /// (symbol, codeword) for every leaf, in code point order.
    const std::vector<std::pair<char32_t, BitString>>& codes() const noexcept { return codes_; }

    /// Indented text rendering, one node per line.
    std::string dump() const;

private:
    std::vector<Node> nodes_;
    std::size_t root_ = 0;
    std::vector<std::pair<char32_t, BitString>> codes_;
};

}  // namespace markovpass
