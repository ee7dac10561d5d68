#include "markovpass/codec.hpp"

#include <exception>
#include <mutex>

#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

namespace markovpass {

namespace {

// Runs body(i) for i in [0, n), in parallel when asked. The first exception
// thrown by any iteration is rethrown after the loop.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::u32string resolve_start(const TransitionTable& table, std::optional<std::u32string> start) {
    const std::size_t k = table.order();
    if (!start) {
        if (k > kDefaultStart.size())
            throw Error(ErrorCode::OrderExceedsDefaultStart,
                        "order " + std::to_string(k) + " needs an explicit start state");
        start = std::u32string(kDefaultStart.substr(0, k));
    }
    if (start->size() != k || !table.find(*start))
        throw Error(ErrorCode::StartStateNotFound, "start state \"" + utf8::encode(*start) + "\" is not in the model");
    return std::move(*start);
}

}  // namespace

Model::Model(std::size_t order, std::u32string initial_state, Trees trees, std::size_t corpus_length,
             std::string source_fingerprint)
    : order_(order),
      initial_state_(std::move(initial_state)),
      trees_(std::move(trees)),
      corpus_length_(corpus_length),
      source_fingerprint_(std::move(source_fingerprint)) {}

const CodeTree* Model::tree(std::u32string_view state) const {
    // libstdc++ has no heterogeneous lookup for unordered_map in C++20 mode.
    auto it = trees_.find(std::u32string(state));
    return it == trees_.end() ? nullptr : &it->second;
}

Model build_model(const TransitionTable& table, std::size_t corpus_length, std::string fingerprint,
                  std::optional<std::u32string> start, Execution exec) {
    auto initial = resolve_start(table, std::move(start));
    if (!state_closure_check(table))
        throw Error(ErrorCode::UnknownTransition, "transition table is not closed under state shifts");

    std::vector<const TransitionTable::Rows::value_type*> rows;
    rows.reserve(table.state_count());
    for (const auto& row : table.rows()) rows.push_back(&row);

    std::vector<CodeTree> built(rows.size());
    for_each_index(rows.size(), exec, [&](std::size_t i) { built[i] = CodeTree::build(rows[i]->second); });

    Model::Trees trees;
    trees.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) trees.emplace(rows[i]->first, std::move(built[i]));
    return Model(table.order(), std::move(initial), std::move(trees), corpus_length, std::move(fingerprint));
}

Model build_model(const Corpus& corpus, std::size_t k, std::optional<std::u32string> start, Execution exec) {
    require_order(corpus, k);
    if (!start && k > kDefaultStart.size())
        throw Error(ErrorCode::OrderExceedsDefaultStart, "order " + std::to_string(k) + " needs an explicit start state");
    auto table = build_table(corpus, k, exec);
    return build_model(table, corpus.length(), corpus.fingerprint(), std::move(start), exec);
}

std::u32string decode(const Model& model, BitStream& bits) {
    std::u32string out = model.initial_state();
    std::u32string state = model.initial_state();
    std::size_t zero_bit_run = 0;
    while (!bits.exhausted()) {
        const CodeTree* tree = model.tree(state);
        if (!tree) throw Error(ErrorCode::UnknownTransition, "decoder reached unknown state");
        const auto step = tree->traverse(bits);
        if (step.bits_consumed == 0) {
            if (++zero_bit_run > model.corpus_length())
                throw Error(ErrorCode::DeterministicCycle, "model cannot consume entropy from this state");
        } else {
            zero_bit_run = 0;
        }
        out.push_back(step.symbol);
        state.erase(0, 1);
        state.push_back(step.symbol);
    }
    return out;
}

std::u32string decode(const Model& model, const BitString& bits) {
    BitStream stream(bits);
    return decode(model, stream);
}

BitString encode(const Model& model, std::u32string_view text) {
    const std::size_t k = model.order();
    if (text.substr(0, k) != model.initial_state())
        throw Error(ErrorCode::BadPrefix, "text does not begin with the model's initial state");
    BitString out;
    for (std::size_t i = k; i < text.size(); ++i) {
        const auto state = text.substr(i - k, k);
        const CodeTree* tree = model.tree(state);
        if (!tree || !tree->contains(text[i]))
            throw Error(ErrorCode::UnknownTransition,
                        "\"" + utf8::encode(state) + "\" is never followed by \"" + utf8::encode(text[i]) + "\"");
        out.append(tree->codeword(text[i]));
    }
    return out;
}

bool verify_roundtrip(const Model& model, const BitString& bits) {
    try {
        const BitString e = encode(model, decode(model, bits));
        if (e.size() < bits.size()) return false;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (e[i] != bits[i]) return false;
        for (std::size_t i = bits.size(); i < e.size(); ++i)
            if (e[i]) return false;
        return true;
    } catch (const Error&) {
        return false;
    }
}

Generated generate(const Model& model, std::size_t n, RandomSource& rng) {
    Generated g{{}, rng.bits(n)};
    g.password = decode(model, g.bits);
    if (!verify_roundtrip(model, g.bits))
        throw Error(ErrorCode::RoundTripFailed, "bits " + g.bits.to_string() + " did not survive encode(decode())");
    return g;
}

std::vector<std::u32string> decode_batch(const Model& model, std::span<const BitString> inputs, Execution exec) {
    std::vector<std::u32string> out(inputs.size());
    for_each_index(inputs.size(), exec, [&](std::size_t i) { out[i] = decode(model, inputs[i]); });
    return out;
}

std::size_t count_roundtrip_failures(const Model& model, std::span<const BitString> inputs, Execution exec) {
    std::vector<std::uint8_t> failed(inputs.size(), 0);
    for_each_index(inputs.size(), exec, [&](std::size_t i) { failed[i] = verify_roundtrip(model, inputs[i]) ? 0 : 1; });
    std::size_t total = 0;
    for (auto f : failed) total += f;
    return total;
}

std::vector<Generated> generate_batch(const Model& model, std::size_t n, std::size_t count, RandomSource& rng,
                                      Execution exec) {
    std::vector<BitString> inputs;
    inputs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) inputs.push_back(rng.bits(n));

    std::vector<Generated> out(count);
    std::vector<std::uint8_t> ok(count, 0);
    for_each_index(count, exec, [&](std::size_t i) {
        out[i].bits = inputs[i];
        out[i].password = decode(model, inputs[i]);
        ok[i] = verify_roundtrip(model, inputs[i]) ? 1 : 0;
    });
    for (std::size_t i = 0; i < count; ++i)
        if (!ok[i])
            throw Error(ErrorCode::RoundTripFailed,
                        "bits " + inputs[i].to_string() + " did not survive encode(decode())");
    return out;
}

}  // namespace markovpass
