#include "markovpass/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "markovpass/baselines.hpp"
#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

namespace markovpass::cli {

namespace {

constexpr std::size_t kMaxBits = 4096;

std::unique_ptr<RandomSource> make_rng(const RunConfig& config, std::ostream& err) {
    if (config.seed) {
        err << "warning: test seed is set; output is reproducible and NOT FOR REAL USE\n";
        return std::make_unique<SeededTestRandom>(*config.seed);
    }
    return std::make_unique<SystemRandom>();
}

void print_scheme(std::ostream& err, const SchemeSpec& spec, std::uint64_t units) {
    err << std::fixed << std::setprecision(2) << "scheme " << spec.name << ": " << units << " x "
        << spec.entropy_bits_per_unit() << " bits = " << static_cast<double>(units) * spec.entropy_bits_per_unit()
        << " bits\n";
}

int run_markov(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.corpus_path)
        throw Error(ErrorCode::InvalidArgument, std::string("no corpus given (use --corpus or ") + kCorpusEnv + ")");
    const Corpus corpus = load_corpus(*config.corpus_path);
    require_order(corpus, config.order);
    std::optional<std::u32string> start;
    if (config.start_state) start = utf8::decode_or_throw(*config.start_state);
    if (!start && config.order > kDefaultStart.size())
        throw Error(ErrorCode::OrderExceedsDefaultStart,
                    "order " + std::to_string(config.order) + " needs --start-state");

    const TransitionTable table = build_table(corpus, config.order);
    const Model model = build_model(table, corpus.length(), corpus.fingerprint(), start);

    if (config.stats) print_stats(out, model_stats(table, model), model);
    if (config.dump_state) {
        const CodeTree* tree = model.tree(utf8::decode_or_throw(*config.dump_state));
        if (!tree) throw Error(ErrorCode::StartStateNotFound, "state \"" + *config.dump_state + "\" is not in the model");
        out << tree->dump();
    }
    if (config.encode_text) {
        out << encode(model, utf8::decode_or_throw(*config.encode_text)).to_string() << '\n';
        return kExitOk;
    }
    if (config.decode_bits) {
        const auto bits = BitString::parse(*config.decode_bits);
        const auto text = decode(model, bits);
        if (!verify_roundtrip(model, bits)) throw Error(ErrorCode::RoundTripFailed, "decode did not round-trip");
        out << utf8::encode(text) << '\n';
        return kExitOk;
    }
    auto rng = make_rng(config, err);
    for (const auto& g : generate_batch(model, config.bits, config.count, *rng)) {
        if (config.show_bits) out << g.bits.to_string() << '\t';
        out << utf8::encode(g.password) << '\n';
    }
    return kExitOk;
}

int run_baseline(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto rng = make_rng(config, err);
    switch (config.scheme) {
    case Scheme::Chars: {
        const auto spec = char_scheme();
        const auto units = spec.units_needed(config.bits);
        if (config.stats) print_scheme(err, spec, units);
        for (std::size_t i = 0; i < config.count; ++i) out << random_chars(units, *rng) << '\n';
        break;
    }
    case Scheme::Words: {
        if (!config.wordlist_path) throw Error(ErrorCode::InvalidArgument, "--scheme words needs --wordlist");
        const auto list = Wordlist::load(*config.wordlist_path);
        const auto spec = word_scheme(list);
        const auto units = spec.units_needed(config.bits);
        if (config.stats) print_scheme(err, spec, units);
        for (std::size_t i = 0; i < config.count; ++i) out << random_words(units, list, *rng) << '\n';
        break;
    }
    case Scheme::Syllables: {
        const auto syllables = SyllableConfig::reconstructed_default();
        const auto spec = syllable_scheme(syllables);
        const auto units = spec.units_needed(config.bits);
        if (config.stats) print_scheme(err, spec, units);
        for (std::size_t i = 0; i < config.count; ++i) out << random_syllable_words(units, syllables, *rng) << '\n';
        break;
    }
    case Scheme::Markov:
        break;
    }
    return kExitOk;
}

}  // namespace

ModelStats model_stats(const TransitionTable& table, const Model& model) {
    ModelStats s;
    s.order = table.order();
    s.states = table.state_count();
    s.transitions = table.total_count();
    s.min_branching = table.rows().empty() ? 0 : std::numeric_limits<std::size_t>::max();
    double weighted_bits = 0.0;
    for (const auto& [state, dist] : table.rows()) {
        s.min_branching = std::min(s.min_branching, dist.size());
        s.max_branching = std::max(s.max_branching, dist.size());
        if (dist.size() == 1) ++s.deterministic_states;
        const CodeTree* tree = model.tree(state);
        for (const auto& [next, count] : dist)
            weighted_bits += static_cast<double>(count) * static_cast<double>(tree->codeword(next).size());
    }
    if (s.transitions) s.mean_bits_per_char = weighted_bits / static_cast<double>(s.transitions);
    return s;
}

void print_stats(std::ostream& out, const ModelStats& s, const Model& model) {
    out << "order: " << s.order << '\n'
        << "states: " << s.states << '\n'
        << "transitions: " << s.transitions << '\n'
        << "min_branching: " << s.min_branching << '\n'
        << "max_branching: " << s.max_branching << '\n'
        << "deterministic_states: " << s.deterministic_states << '\n'
        << "mean_bits_per_char: " << std::fixed << std::setprecision(4) << s.mean_bits_per_char << '\n'
        << std::defaultfloat << "initial_state: \"" << utf8::encode(model.initial_state()) << "\"\n"
        << "corpus_fingerprint: " << model.source_fingerprint() << '\n';
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.bits > kMaxBits)
            throw Error(ErrorCode::InvalidArgument, "--bits may not exceed " + std::to_string(kMaxBits));
        if (config.order == 0) throw Error(ErrorCode::InvalidArgument, "--order must be positive");
        if (config.scheme == Scheme::Markov) return run_markov(config, out, err);
        return run_baseline(config, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_config_error(e.code()) ? kExitConfig : kExitCodec;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCodec;
    }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pronounceable passwords from uniformly random bits via a character Markov model", "markovpass"};
    RunConfig config;
    std::string corpus;
    std::string wordlist;
    std::uint64_t seed = 0;

    const std::map<std::string, Scheme> schemes{
        {"markov", Scheme::Markov}, {"chars", Scheme::Chars}, {"words", Scheme::Words}, {"syllables", Scheme::Syllables}};

    auto* corpus_opt = app.add_option("--corpus", corpus, "UTF-8 text file the model is built from")->envname(kCorpusEnv);
    app.add_option("-k,--order", config.order, "Characters per Markov state")->check(CLI::PositiveNumber);
    app.add_option("-b,--bits", config.bits, "Bits of entropy per password");
    app.add_option("-n,--count", config.count, "Number of passwords to print");
    app.add_option("--scheme", config.scheme, "markov | chars | words | syllables")
        ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case))
        ->option_text("SCHEME");
    app.add_option("--start-state", config.start_state, "Initial state (required for order > 4)");
    auto* seed_opt = app.add_option("--seed,--insecure-test-seed", seed,
                                    "Deterministic RNG seed for testing; never use for real passwords");
    auto* wordlist_opt = app.add_option("--wordlist", wordlist, "One word per line (words scheme)");
    app.add_flag("--show-bits", config.show_bits, "Print the random bits before each password");
    app.add_flag("--stats", config.stats, "Print model or scheme statistics");
    app.add_option("--dump-state", config.dump_state, "Print the code tree of one state");
    app.add_option("--encode", config.encode_text, "Print the bits that generate the given password");
    app.add_option("--decode", config.decode_bits, "Print the password generated by the given bits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }
    if (*corpus_opt) config.corpus_path = corpus;
    if (*wordlist_opt) config.wordlist_path = wordlist;
    if (*seed_opt) config.seed = seed;
    return run(config, out, err);
}

}  // namespace markovpass::cli
