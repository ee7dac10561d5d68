#include "markovpass/corpus.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

namespace markovpass {

namespace {

bool is_collapsible(char32_t c) { return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n'; }

}  // namespace

std::u32string normalize_whitespace(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    bool in_run = false;
    for (char32_t c : text) {
        if (is_collapsible(c)) {
            if (!in_run) out.push_back(U' ');
            in_run = true;
        } else {
            out.push_back(c);
            in_run = false;
        }
    }
    return out;
}

Corpus::Corpus(std::u32string_view text) : chars_(normalize_whitespace(text)) {
    if (chars_.empty()) throw Error(ErrorCode::EmptyAfterNormalization, "corpus has no characters");
}

Corpus Corpus::from_utf8(std::string_view bytes) { return Corpus(utf8::decode_or_throw(bytes)); }

std::u32string Corpus::window(std::size_t pos, std::size_t k) const {
    std::u32string out;
    out.reserve(k);
    const std::size_t n = chars_.size();
    for (std::size_t j = 0; j < k; ++j) out.push_back(chars_[(pos + j) % n]);
    return out;
}

std::string Corpus::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : utf8::encode(chars_)) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto decoded = utf8::decode(bytes);
    if (!decoded) throw Error(ErrorCode::InvalidEncoding, path.string() + " is not valid UTF-8");
    return Corpus(*decoded);
}

void require_order(const Corpus& corpus, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "model order must be positive");
    if (corpus.length() < k + 1) {
        throw Error(ErrorCode::CorpusTooShort, "corpus of length " + std::to_string(corpus.length()) +
                                                   " cannot support order " + std::to_string(k));
    }
}

std::u32string ring_buffer(const Corpus& corpus, std::size_t k) {
    std::u32string ring = corpus.chars();
    ring.append(corpus.chars(), 0, k);
    return ring;
}

std::vector<Window> circular_windows(const Corpus& corpus, std::size_t k) {
    require_order(corpus, k);
    const auto ring = ring_buffer(corpus, k);
    std::vector<Window> out;
    out.reserve(corpus.length());
    for_each_window(ring, k, 0, corpus.length(),
                    [&](std::u32string_view state, char32_t next) { out.push_back({std::u32string(state), next}); });
    return out;
}

}  // namespace markovpass
