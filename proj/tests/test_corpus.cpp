#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "markovpass/corpus.hpp"
#include "markovpass/error.hpp"
#include "markovpass/utf8.hpp"

using namespace markovpass;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& bytes) {
    auto path = std::filesystem::temp_directory_path() / ("markovpass_test_" + name);
    std::ofstream(path, std::ios::binary) << bytes;
    return path;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

std::vector<Window> expected(std::initializer_list<std::pair<const char32_t*, char32_t>> pairs) {
    std::vector<Window> out;
    for (auto [s, c] : pairs) out.push_back({s, c});
    return out;
}

}  // namespace

TEST_CASE("load_corpus collapses whitespace runs") {
    auto path = write_temp("ws.txt", "a  b\nc");
    const auto c = load_corpus(path);
    CHECK(c.chars() == U"a b c");
    CHECK(c.length() == 5);
}

TEST_CASE("tabs, CR and mixed runs become one space; punctuation and case survive") {
    const Corpus c(U"\r\n\tHe said,\t\t\"No!\"\r\n\r\nEnd. ");
    CHECK(c.chars() == U" He said, \"No!\" End. ");
}

TEST_CASE("load_corpus errors") {
    CHECK(code_of([] { load_corpus("/nonexistent/definitely/missing.txt"); }) == ErrorCode::FileNotFound);
    CHECK(code_of([] { load_corpus(write_temp("empty.txt", "")); }) == ErrorCode::EmptyAfterNormalization);
    CHECK(code_of([] { load_corpus(write_temp("bad.txt", "ab\xff\xfe")); }) == ErrorCode::InvalidEncoding);
    // Overlong encoding of '/'.
    CHECK(code_of([] { load_corpus(write_temp("overlong.txt", "\xc0\xaf")); }) == ErrorCode::InvalidEncoding);
}

TEST_CASE("whitespace-only file is one space, not empty") {
    const auto c = load_corpus(write_temp("spaces.txt", " \n\t "));
    CHECK(c.chars() == U" ");
}

TEST_CASE("multi-byte characters are kept as single scalar values") {
    const auto c = load_corpus(write_temp("utf8.txt", "caf\xc3\xa9 \xe2\x80\x94 \xf0\x9f\x98\x80"));
    CHECK(c.chars() == U"café — 😀");
    CHECK(c.length() == 8);
    CHECK(utf8::encode(c.chars()) == "caf\xc3\xa9 \xe2\x80\x94 \xf0\x9f\x98\x80");
}

TEST_CASE("circular_windows examples") {
    CHECK(circular_windows(Corpus(U"abab"), 1) == expected({{U"a", U'b'}, {U"b", U'a'}, {U"a", U'b'}, {U"b", U'a'}}));
    CHECK(circular_windows(Corpus(U"abc"), 2) == expected({{U"ab", U'c'}, {U"bc", U'a'}, {U"ca", U'b'}}));
    CHECK(circular_windows(Corpus(U"aabb"), 1) ==
          expected({{U"a", U'a'}, {U"a", U'b'}, {U"b", U'b'}, {U"b", U'a'}}));
}

TEST_CASE("circular_windows rejects corpora shorter than k+1") {
    CHECK(code_of([] { circular_windows(Corpus(U"ab"), 2); }) == ErrorCode::CorpusTooShort);
    CHECK(code_of([] { circular_windows(Corpus(U"a"), 1); }) == ErrorCode::CorpusTooShort);
    CHECK(circular_windows(Corpus(U"abc"), 2).size() == 3);
}

TEST_CASE("property: window count and content match direct modular indexing") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 2 + rng() % 20;
        std::u32string text;
        for (std::size_t i = 0; i < len; ++i) text.push_back(U'a' + static_cast<char32_t>(rng() % 3));
        const Corpus c(text);
        for (std::size_t k = 1; k < len; ++k) {
            const auto w = circular_windows(c, k);
            REQUIRE(w.size() == len);
            for (std::size_t i = 0; i < len; ++i) {
                std::u32string state;
                for (std::size_t j = 0; j < k; ++j) state.push_back(text[(i + j) % len]);
                CHECK(w[i].state == state);
                CHECK(w[i].next == text[(i + k) % len]);
            }
        }
    }
}

TEST_CASE("property: the window multiset determines the corpus up to rotation") {
    // Brute force: every string over {a,b} of length 6 whose k=2 window
    // multiset matches must be a rotation of the original.
    auto multiset = [](const std::u32string& s, std::size_t k) {
        std::map<std::pair<std::u32string, char32_t>, int> m;
        for (const auto& w : circular_windows(Corpus(s), k)) ++m[{w.state, w.next}];
        return m;
    };
    auto is_rotation = [](const std::u32string& a, const std::u32string& b) {
        return a.size() == b.size() && (a + a).find(b) != std::u32string::npos;
    };
    const std::size_t len = 6;
    const std::size_t k = len - 1;
    for (unsigned x = 0; x < (1U << len); ++x) {
        std::u32string s;
        for (std::size_t i = 0; i < len; ++i) s.push_back((x >> i) & 1 ? U'b' : U'a');
        const auto target = multiset(s, k);
        for (unsigned y = 0; y < (1U << len); ++y) {
            std::u32string t;
            for (std::size_t i = 0; i < len; ++i) t.push_back((y >> i) & 1 ? U'b' : U'a');
            if (multiset(t, k) == target) CHECK(is_rotation(s, t));
        }
    }
}

TEST_CASE("property: normalization is idempotent") {
    std::mt19937_64 rng(11);
    const std::u32string alphabet = U"ab \t\r\n.é";
    for (int trial = 0; trial < 500; ++trial) {
        std::u32string text;
        const std::size_t len = rng() % 30;
        for (std::size_t i = 0; i < len; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
        const auto once = normalize_whitespace(text);
        CHECK(normalize_whitespace(once) == once);
        CHECK(once.find_first_of(U"\t\r\n") == std::u32string::npos);
        CHECK(once.find(U"  ") == std::u32string::npos);
    }
}

TEST_CASE("fingerprint depends on content only") {
    CHECK(Corpus(U"a  b").fingerprint() == Corpus(U"a\nb").fingerprint());
    CHECK(Corpus(U"a b").fingerprint() != Corpus(U"a c").fingerprint());
    CHECK(Corpus(U"a b").fingerprint().size() == 16);
}

TEST_CASE("bundled novel: normalized length") {
    const std::string path = std::string(MARKOVPASS_TEST_DATA) + "/moby-dick.txt";
    // Oracle on raw bytes: count UTF-8 lead bytes, counting each whitespace
    // run once.
    std::ifstream in(path, std::ios::binary);
    std::size_t count = 0;
    bool in_space = false;
    for (char ch; in.get(ch);) {
        const auto b = static_cast<unsigned char>(ch);
        if ((b & 0xC0) == 0x80) continue;
        const bool space = b == ' ' || b == '\t' || b == '\r' || b == '\n';
        if (!(space && in_space)) ++count;
        in_space = space;
    }
    CHECK(count == 1'186'979);
    CHECK(load_corpus(path).length() == count);
}
