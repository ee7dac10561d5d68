#include "markovpass/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "markovpass/error.hpp"

namespace markovpass {

namespace {

template <typename Seq>
const auto& pick(const Seq& items, RandomSource& rng) {
    return items[static_cast<std::size_t>(rng.uniform(items.size()))];
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    boost::multiprecision::cpp_int r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::InvalidArgument, "syllable word space does not fit in 64 bits");
    return static_cast<std::uint64_t>(r);
}

}  // namespace

double entropy_bits(std::uint64_t set_size, std::uint64_t choices) {
    if (set_size == 0) throw Error(ErrorCode::InvalidArgument, "set size must be positive");
    return static_cast<double>(choices) * std::log2(static_cast<double>(set_size));
}

std::uint64_t SchemeSpec::units_needed(std::uint64_t target_bits) const {
    using boost::multiprecision::cpp_int;
    if (target_bits == 0) return 0;
    if (unit_set_size < 2)
        throw Error(ErrorCode::InvalidArgument, "scheme \"" + name + "\" has no entropy per unit");
    const cpp_int target = cpp_int(1) << static_cast<unsigned>(target_bits);
    cpp_int space = 1;
    std::uint64_t units = 0;
    while (space < target) {
        space *= unit_set_size;
        ++units;
    }
    return units;
}

SchemeSpec char_scheme() { return {"chars", kPasswordChars.size()}; }

std::string random_chars(std::size_t n, RandomSource& rng) {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(pick(kPasswordChars, rng));
    return out;
}

Wordlist::Wordlist(std::vector<std::string> words) : words_(std::move(words)) {
    if (words_.empty()) throw Error(ErrorCode::EmptyWordlist, "wordlist has no words");
}

Wordlist Wordlist::parse(std::string_view text) {
    std::vector<std::string> words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            const auto last = line.find_last_not_of(" \t\r");
            words.emplace_back(line.substr(first, last - first + 1));
        }
        pos = end + 1;
    }
    return Wordlist(std::move(words));
}

Wordlist Wordlist::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

SchemeSpec word_scheme(const Wordlist& list) { return {"words", list.size() * kWordSeparators.size()}; }

std::string random_words(std::size_t count, const Wordlist& list, RandomSource& rng) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        out += pick(list.words(), rng);
        out += pick(kWordSeparators, rng);
    }
    return out;
}

double words_entropy(std::size_t count, const Wordlist& list) {
    return entropy_bits(list.size(), count) + entropy_bits(kWordSeparators.size(), count);
}

SyllableConfig SyllableConfig::reconstructed_default() {
    SyllableConfig c;
    c.templates = {"abbabbaa", "babaabab", "abababab", "babababa", "aabbabba", "bababbaa", "abbaabab",
                   "baabbaab", "ababbaba", "babbaaba", "abbababa", "baababba", "abaabbab"};
    c.vowels = {"a", "e", "i", "o", "u"};
    c.consonants = {"b", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p",
                    "r", "s", "t", "v", "w", "x", "y", "z", "ch", "cl", "cr"};
    return c;
}

void SyllableConfig::validate() const {
    if (templates.empty() || vowels.empty() || consonants.empty())
        throw Error(ErrorCode::InvalidArgument, "syllable configuration has an empty set");
    if (std::set<std::string>(templates.begin(), templates.end()).size() != templates.size())
        throw Error(ErrorCode::InvalidArgument, "syllable templates must be distinct");
    const auto vowel_count = [](const std::string& t) { return std::count(t.begin(), t.end(), 'a'); };
    for (const auto& t : templates) {
        if (t.empty() || t.find_first_not_of("ab") != std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "template \"" + t + "\" may only use 'a' and 'b'");
        if (t.size() != templates.front().size() || vowel_count(t) != vowel_count(templates.front()))
            throw Error(ErrorCode::InvalidArgument, "templates must share vowel and consonant counts");
    }
}

std::size_t SyllableConfig::vowel_slots() const {
    return static_cast<std::size_t>(std::count(templates.front().begin(), templates.front().end(), 'a'));
}

std::size_t SyllableConfig::consonant_slots() const { return templates.front().size() - vowel_slots(); }

std::uint64_t SyllableConfig::word_space() const {
    validate();
    using boost::multiprecision::cpp_int;
    const cpp_int space = cpp_int(templates.size()) * checked_pow(vowels.size(), vowel_slots()) *
                          checked_pow(consonants.size(), consonant_slots());
    if (space > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::InvalidArgument, "syllable word space does not fit in 64 bits");
    return static_cast<std::uint64_t>(space);
}

SchemeSpec syllable_scheme(const SyllableConfig& config) { return {"syllables", config.word_space()}; }

std::string random_syllable_word(const SyllableConfig& config, RandomSource& rng) {
    config.validate();
    const std::string& shape = pick(config.templates, rng);
    std::string out;
    for (char slot : shape) out += slot == 'a' ? pick(config.vowels, rng) : pick(config.consonants, rng);
    return out;
}

std::string random_syllable_words(std::size_t count, const SyllableConfig& config, RandomSource& rng) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += ' ';
        out += random_syllable_word(config, rng);
    }
    return out;
}

}  // namespace markovpass
