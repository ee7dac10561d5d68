#include "markovpass/huffman.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

namespace markovpass {

namespace {

std::string printable(char32_t c) {
    if (c == U' ') return "' '";
    return utf8::encode(c);
}

}  // namespace

CodeTree CodeTree::build(const Distribution& dist) {
    if (dist.empty()) throw Error(ErrorCode::EmptyDistribution, "cannot build a code tree with no symbols");

    CodeTree tree;
    tree.nodes_.reserve(2 * dist.size() - 1);
    for (const auto& [symbol, count] : dist) {
        if (count == 0) throw Error(ErrorCode::EmptyDistribution, "symbol weights must be positive");
        tree.nodes_.push_back(Node{count, symbol, symbol, -1, -1});
    }

    // Subtrees are disjoint, so min_symbol is unique among queued nodes and
    // (weight, min_symbol) is a strict total order.
    auto later = [&](std::size_t a, std::size_t b) {
        const auto& na = tree.nodes_[a];
        const auto& nb = tree.nodes_[b];
        return std::tie(na.weight, na.min_symbol) > std::tie(nb.weight, nb.min_symbol);
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> queue(later);
    for (std::size_t i = 0; i < tree.nodes_.size(); ++i) queue.push(i);

    while (queue.size() > 1) {
        const std::size_t first = queue.top();
        queue.pop();
        const std::size_t second = queue.top();
        queue.pop();
        const Node& l = tree.nodes_[first];
        const Node& r = tree.nodes_[second];
        Node branch{l.weight + r.weight, 0, std::min(l.min_symbol, r.min_symbol), static_cast<std::int32_t>(first),
                    static_cast<std::int32_t>(second)};
        tree.nodes_.push_back(branch);
        queue.push(tree.nodes_.size() - 1);
    }
    tree.root_ = queue.top();

    // Assign codewords with an explicit stack; depth is bounded by the
    // number of symbols, which can be large for order-1 models.
    std::vector<std::pair<std::size_t, BitString>> stack{{tree.root_, BitString{}}};
    while (!stack.empty()) {
        auto [index, path] = std::move(stack.back());
        stack.pop_back();
        const Node& node = tree.nodes_[index];
        if (node.is_leaf()) {
            tree.codes_.emplace_back(node.symbol, std::move(path));
            continue;
        }
        BitString right = path;
        right.push_back(true);
        path.push_back(false);
        stack.emplace_back(static_cast<std::size_t>(node.right), std::move(right));
        stack.emplace_back(static_cast<std::size_t>(node.left), std::move(path));
    }
    std::sort(tree.codes_.begin(), tree.codes_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return tree;
}

CodeTree::Step CodeTree::traverse(BitStream& bits) const {
    std::size_t index = root_;
    std::size_t consumed = 0;
    while (!nodes_[index].is_leaf()) {
        const Node& node = nodes_[index];
        index = static_cast<std::size_t>(bits.next() ? node.right : node.left);
        ++consumed;
    }
    return {nodes_[index].symbol, consumed};
}

bool CodeTree::contains(char32_t symbol) const noexcept {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), symbol,
                               [](const auto& entry, char32_t s) { return entry.first < s; });
    return it != codes_.end() && it->first == symbol;
}

const BitString& CodeTree::codeword(char32_t symbol) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), symbol,
                               [](const auto& entry, char32_t s) { return entry.first < s; });
    if (it == codes_.end() || it->first != symbol)
        throw Error(ErrorCode::SymbolNotInTree, "symbol " + utf8::encode(symbol) + " is not a leaf");
    return it->second;
}

std::string CodeTree::dump() const {
    std::string out;
    std::vector<std::pair<std::size_t, std::string>> stack{{root_, ""}};
    while (!stack.empty()) {
        auto [index, path] = std::move(stack.back());
        stack.pop_back();
        const Node& node = nodes_[index];
        out.append(path.size() * 2, ' ');
        out += path.empty() ? "-" : path;
        out += " (" + std::to_string(node.weight) + ")";
        if (node.is_leaf()) {
            out += " " + printable(node.symbol);
        } else {
            stack.emplace_back(static_cast<std::size_t>(node.right), path + "1");
            stack.emplace_back(static_cast<std::size_t>(node.left), path + "0");
        }
        out += '\n';
    }
    return out;
}

}  // namespace markovpass
