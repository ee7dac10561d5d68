#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace markovpass {

/// Collapses every maximal run of space, tab, CR and LF into one space.
/// Everything else (case, punctuation, non-ASCII) is kept verbatim.
std::u32string normalize_whitespace(std::u32string_view text);

/// A normalized character sequence, read circularly when building models.
///
/// Treating the text as a ring means the final k characters also have a
/// successor (the first character of the file), so no state built from a
/// corpus can be left without an outgoing transition.
class Corpus {
public:
    /// Normalizes `text`; throws EmptyAfterNormalization if nothing is left.
    explicit Corpus(std::u32string_view text);

    static Corpus from_utf8(std::string_view bytes);

    const std::u32string& chars() const noexcept { return chars_; }
    std::size_t length() const noexcept { return chars_.size(); }

    /// chars_[pos..pos+k) with indices taken modulo length().
    std::u32string window(std::size_t pos, std::size_t k) const;

    /// 64-bit FNV-1a over the UTF-8 encoding, rendered as 16 hex digits.
    std::string fingerprint() const;

private:
    std::u32string chars_;
};

/// Reads a UTF-8 file. Errors: file-not-found, invalid-encoding,
/// empty-after-normalization.
Corpus load_corpus(const std::filesystem::path& path);

struct Window {
    std::u32string state;
    char32_t next;

    bool operator==(const Window&) const = default;
};

/// Exactly corpus.length() windows; window i is (chars[i..i+k), chars[i+k])
/// with wrap-around. Throws CorpusTooShort when length < k + 1.
std::vector<Window> circular_windows(const Corpus& corpus, std::size_t k);

/// Allocation-free variant: calls fn(state_view, next) for positions
/// [first, last). The view is only valid during the call.
template <typename Fn>
void for_each_window(const std::u32string& ring, std::size_t k, std::size_t first, std::size_t last, Fn&& fn) {
    for (std::size_t i = first; i < last; ++i) {
        fn(std::u32string_view(ring).substr(i, k), ring[i + k]);
    }
}

/// chars followed by their own first k characters, so that every circular
/// window of order k is a contiguous substring.
std::u32string ring_buffer(const Corpus& corpus, std::size_t k);

void require_order(const Corpus& corpus, std::size_t k);

}  // namespace markovpass
