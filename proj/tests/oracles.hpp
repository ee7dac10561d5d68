#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "markovpass/huffman.hpp"
#include "markovpass/random.hpp"

namespace oracle {

/// Minimum of sum(w_i * l_i) over all codeword-length vectors that satisfy
/// Kraft's inequality, i.e. over every binary prefix code for the weights.
inline std::uint64_t min_weighted_path_length(const std::vector<std::uint64_t>& weights) {
    const std::size_t n = weights.size();
    if (n <= 1) return 0;
    const std::size_t max_len = n - 1;  // no optimal code is deeper
    std::vector<std::size_t> len(n, 1);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (;;) {
        std::uint64_t kraft = 0;  // in units of 2^-max_len
        for (auto l : len) kraft += std::uint64_t{1} << (max_len - l);
        if (kraft <= (std::uint64_t{1} << max_len)) {
            std::uint64_t wpl = 0;
            for (std::size_t i = 0; i < n; ++i) wpl += weights[i] * len[i];
            best = std::min(best, wpl);
        }
        std::size_t i = 0;
        while (i < n && len[i] == max_len) len[i++] = 1;
        if (i == n) break;
        ++len[i];
    }
    return best;
}

/// Leaf depths by recursive descent of the node array.
inline void leaf_depths(const markovpass::CodeTree& tree, std::size_t node, std::size_t depth,
                        std::vector<std::size_t>& out) {
    const auto& n = tree.nodes()[node];
    if (n.is_leaf()) {
        out.push_back(depth);
        return;
    }
    leaf_depths(tree, static_cast<std::size_t>(n.left), depth + 1, out);
    leaf_depths(tree, static_cast<std::size_t>(n.right), depth + 1, out);
}

/// sum 2^-depth == 1, evaluated exactly.
inline bool kraft_equality(const markovpass::CodeTree& tree) {
    using boost::multiprecision::cpp_int;
    std::vector<std::size_t> depths;
    leaf_depths(tree, tree.root(), 0, depths);
    const std::size_t deepest = *std::max_element(depths.begin(), depths.end());
    cpp_int sum = 0;
    for (auto d : depths) sum += cpp_int(1) << static_cast<unsigned>(deepest - d);
    return sum == (cpp_int(1) << static_cast<unsigned>(deepest));
}

/// Recursively checks branch weight == left + right.
inline bool weights_consistent(const markovpass::CodeTree& tree, std::size_t node) {
    const auto& n = tree.nodes()[node];
    if (n.is_leaf()) return n.weight > 0;
    const auto& l = tree.nodes()[static_cast<std::size_t>(n.left)];
    const auto& r = tree.nodes()[static_cast<std::size_t>(n.right)];
    return n.weight == l.weight + r.weight && weights_consistent(tree, static_cast<std::size_t>(n.left)) &&
           weights_consistent(tree, static_cast<std::size_t>(n.right));
}

/// Enumerates every sequence of uniform() outcomes, odometer style. Call
/// uniform() for one full generation, then advance(); repeat until advance()
/// returns false. Requires every run to ask for the same bounds in the same
/// order, which holds for fixed-choice schemes.
class OdometerRandom final : public markovpass::RandomSource {
public:
    void fill(std::span<std::uint8_t>) override { throw std::logic_error("odometer only supports uniform()"); }

    std::uint64_t uniform(std::uint64_t bound) override {
        if (pos_ == digits_.size()) {
            digits_.push_back(0);
            bounds_.push_back(bound);
        }
        return digits_[pos_++];
    }

    bool advance() {
        pos_ = 0;
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < bounds_[i]) return true;
            digits_[i] = 0;
        }
        return false;
    }

private:
    std::vector<std::uint64_t> digits_;
    std::vector<std::uint64_t> bounds_;
    std::size_t pos_ = 0;
};

}  // namespace oracle
