#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "markovpass/random.hpp"

namespace markovpass {

/// choices * log2(set_size). Throws InvalidArgument for set_size == 0.
double entropy_bits(std::uint64_t set_size, std::uint64_t choices);

/// A scheme that makes a fixed number of uniform choices ("units") from a
/// set of fixed size.
struct SchemeSpec {
    std::string name;
    std::uint64_t unit_set_size;

    double entropy_bits_per_unit() const { return entropy_bits(unit_set_size, 1); }

    /// Smallest c with unit_set_size^c >= 2^target_bits, decided with exact
    /// integer arithmetic. Throws InvalidArgument if the set has one element
    /// and target_bits > 0.
    std::uint64_t units_needed(std::uint64_t target_bits) const;
};

/// a-z, A-Z, 0-9 and the 15 symbols !^-=+[]@#$%&*() : 77 characters.
inline constexpr std::string_view kPasswordChars =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890!^-=+[]@#$%&*()";

SchemeSpec char_scheme();

/// n independent uniform draws from kPasswordChars.
std::string random_chars(std::size_t n, RandomSource& rng);

/// Four separators, two bits each.
inline constexpr std::array<std::string_view, 4> kWordSeparators = {",", ";", ".", "-"};

/// One word per line; surrounding whitespace trimmed, blank lines skipped.
class Wordlist {
public:
    explicit Wordlist(std::vector<std::string> words);
    static Wordlist load(const std::filesystem::path& path);
    static Wordlist parse(std::string_view text);

    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::vector<std::string> words_;
};

/// Unit = one word plus one separator.
SchemeSpec word_scheme(const Wordlist& list);

/// `count` words, each followed by a uniform separator.
std::string random_words(std::size_t count, const Wordlist& list, RandomSource& rng);

/// count * (log2 |list| + 2).
double words_entropy(std::size_t count, const Wordlist& list);

/// Template-driven syllable words. Every template has the same number of
/// vowel slots ('a') and consonant slots ('b'), so every word costs the same
/// number of choices and all words are equally likely.
struct SyllableConfig {
    std::vector<std::string> templates;
    std::vector<std::string> vowels;
    std::vector<std::string> consonants;

    /// 13 templates of 4 vowels + 4 consonants, 5 vowels, 22 consonants.
    /// Only "abbabbaa" is known to come from the original scheme; the other
    /// templates and the consonant set are a reconstruction that keeps the
    /// set sizes (and therefore the entropy) intact. The consonant units are
    /// prefix-free and share no letter with the vowels, so every word parses
    /// back to exactly one choice sequence.
    static SyllableConfig reconstructed_default();

    /// Throws InvalidArgument unless the templates are distinct, non-empty,
    /// use only 'a'/'b', and agree on their vowel and consonant counts.
    void validate() const;

    std::size_t vowel_slots() const;
    std::size_t consonant_slots() const;

    /// |templates| * |vowels|^vowel_slots * |consonants|^consonant_slots.
    std::uint64_t word_space() const;
    double per_word_entropy() const { return entropy_bits(word_space(), 1); }
};

SchemeSpec syllable_scheme(const SyllableConfig& config);

std::string random_syllable_word(const SyllableConfig& config, RandomSource& rng);

/// `count` words separated by single spaces.
std::string random_syllable_words(std::size_t count, const SyllableConfig& config, RandomSource& rng);

}  // namespace markovpass
