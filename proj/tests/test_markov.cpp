#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "markovpass/error.hpp"
#include "markovpass/markov.hpp"

using namespace markovpass;

namespace {

TransitionTable table_of(std::u32string_view text, std::size_t k) {
    const Corpus c(text);
    return build_table(circular_windows(c, k), k);
}

std::u32string random_text(std::mt19937_64& rng, std::size_t len, std::u32string_view alphabet) {
    std::u32string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    return s;
}

}  // namespace

TEST_CASE("build_table on the aabb fixture") {
    const auto t = table_of(U"aabb", 1);
    TransitionTable::Rows rows;
    rows[U"a"] = {{U'a', 1}, {U'b', 1}};
    rows[U"b"] = {{U'a', 1}, {U'b', 1}};
    CHECK(t == TransitionTable(1, rows));
    CHECK(t.total_count() == 4);
}

TEST_CASE("build_table on a two-character cycle") {
    const auto t = table_of(U"ab", 1);
    REQUIRE(t.state_count() == 2);
    CHECK(*t.find(U"a") == Distribution{{U'b', 1}});
    CHECK(*t.find(U"b") == Distribution{{U'a', 1}});
    CHECK(t.find(U"c") == nullptr);
}

TEST_CASE("build_table rejects windows of the wrong order") {
    std::vector<Window> w{{U"ab", U'c'}};
    CHECK_THROWS_AS(build_table(w, 1), Error);
}

TEST_CASE("state_closure_check") {
    CHECK(state_closure_check(table_of(U"abc", 2)));
    CHECK(state_closure_check(table_of(U"aabb", 1)));

    TransitionTable::Rows broken;
    broken[U"a"] = {{U'b', 1}};
    CHECK_FALSE(state_closure_check(TransitionTable(1, broken)));
}

TEST_CASE("streaming builds agree with the window-based reference") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto text = random_text(rng, 5 + rng() % 200, U"ab c.Dé");
        const Corpus c(text);
        for (std::size_t k = 1; k <= 4 && k < c.length(); ++k) {
            const auto reference = build_table(circular_windows(c, k), k);
            CHECK(build_table(c, k, Execution::Serial) == reference);
            CHECK(build_table(c, k, Execution::Parallel) == reference);
        }
    }
}

TEST_CASE("property: conservation, positivity and closure") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Corpus c(random_text(rng, 3 + rng() % 100, U"abcd "));
        for (std::size_t k = 1; k <= 3 && k < c.length(); ++k) {
            const auto t = build_table(c, k);
            CHECK(t.total_count() == c.length());
            CHECK(state_closure_check(t));
            for (const auto& [state, dist] : t.rows()) {
                CHECK(state.size() == k);
                CHECK_FALSE(dist.empty());
                for (const auto& [next, count] : dist) CHECK(count >= 1);
            }
        }
    }
}

TEST_CASE("serialization is deterministic and escapes separators") {
    const Corpus c(U"a: b\\c\t");
    const auto a = build_table(c, 2, Execution::Serial).serialize();
    const auto b = build_table(c, 2, Execution::Parallel).serialize();
    CHECK(a == b);
    CHECK(a.rfind("order 2\n", 0) == 0);
    // Every row line has exactly one tab.
    std::size_t lines = 0;
    std::size_t pos = a.find('\n') + 1;
    while (pos < a.size()) {
        const auto end = a.find('\n', pos);
        const auto line = a.substr(pos, end - pos);
        CHECK(std::count(line.begin(), line.end(), '\t') == 1);
        ++lines;
        pos = end + 1;
    }
    CHECK(lines == build_table(c, 2).state_count());
}
