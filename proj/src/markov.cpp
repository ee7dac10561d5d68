#include "markovpass/markov.hpp"

#include <string_view>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

namespace markovpass {

namespace {

// Keys are views into the ring buffer, which outlives the map.
using ViewCounts = std::unordered_map<std::u32string_view, Distribution>;

void count_range(const std::u32string& ring, std::size_t k, std::size_t first, std::size_t last,
                 ViewCounts& counts) {
    for_each_window(ring, k, first, last,
                    [&](std::u32string_view state, char32_t next) { ++counts[state][next]; });
}

TransitionTable::Rows to_rows(ViewCounts&& counts) {
    TransitionTable::Rows rows;
    for (auto& [state, dist] : counts) rows.emplace(std::u32string(state), std::move(dist));
    return rows;
}

std::string escape(char32_t c) {
    switch (c) {
    case U'\\': return "\\\\";
    case U'\t': return "\\t";
    case U'\n': return "\\n";
    case U' ': return "\\s";
    case U':': return "\\c";
    default: return utf8::encode(c);
    }
}

}  // namespace

const Distribution* TransitionTable::find(std::u32string_view state) const {
    auto it = rows_.find(state);
    return it == rows_.end() ? nullptr : &it->second;
}

std::uint64_t TransitionTable::total_count() const {
    std::uint64_t total = 0;
    for (const auto& [state, dist] : rows_)
        for (const auto& [next, count] : dist) total += count;
    return total;
}

std::string TransitionTable::serialize() const {
    std::string out = "order " + std::to_string(order_) + "\n";
    for (const auto& [state, dist] : rows_) {
        for (char32_t c : state) out += escape(c);
        out += '\t';
        bool first = true;
        for (const auto& [next, count] : dist) {
            if (!first) out += ' ';
            first = false;
            out += escape(next);
            out += ':';
            out += std::to_string(count);
        }
        out += '\n';
    }
    return out;
}

TransitionTable build_table(std::span<const Window> windows, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "model order must be positive");
    TransitionTable::Rows rows;
    for (const auto& w : windows) {
        if (w.state.size() != k) throw Error(ErrorCode::InvalidArgument, "window state length differs from order");
        ++rows[w.state][w.next];
    }
    return TransitionTable(k, std::move(rows));
}

TransitionTable build_table(const Corpus& corpus, std::size_t k, Execution exec) {
    require_order(corpus, k);
    const auto ring = ring_buffer(corpus, k);
    const std::size_t n = corpus.length();

    if (exec == Execution::Serial) {
        ViewCounts counts;
        count_range(ring, k, 0, n, counts);
        return TransitionTable(k, to_rows(std::move(counts)));
    }

    const int threads = max_threads();
    std::vector<ViewCounts> partial(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int t = 0; t < threads; ++t) {
        const std::size_t first = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
        const std::size_t last = n * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
        count_range(ring, k, first, last, partial[static_cast<std::size_t>(t)]);
    }

    ViewCounts merged = std::move(partial.front());
    for (std::size_t t = 1; t < partial.size(); ++t) {
        for (auto& [state, dist] : partial[t]) {
            auto& target = merged[state];
            for (const auto& [next, count] : dist) target[next] += count;
        }
    }
    return TransitionTable(k, to_rows(std::move(merged)));
}

bool state_closure_check(const TransitionTable& table) {
    for (const auto& [state, dist] : table.rows()) {
        if (state.empty()) return false;
        for (const auto& [next, count] : dist) {
            if (count == 0) continue;
            std::u32string successor = state.substr(1);
            successor.push_back(next);
            if (!table.find(successor)) return false;
        }
    }
    return true;
}

}  // namespace markovpass
