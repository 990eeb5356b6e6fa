#include <doctest.h>

#include <random>

#include "vtcomb/errors.hpp"
#include "vtcomb/raag.hpp"
#include "vtcomb/suites.hpp"

using namespace vt;
using raag::CommutationGraph;
using raag::Word;

namespace {

CommutationGraph edge_graph() { return CommutationGraph(SimpleGraph(2, {{0, 1}})); }
CommutationGraph free_graph(int n) { return CommutationGraph(SimpleGraph::empty(n)); }
// a - b - c path: a and c do not commute.
CommutationGraph path_graph() { return CommutationGraph(SimpleGraph(3, {{0, 1}, {1, 2}})); }

std::string nf_str(const CommutationGraph& g, const std::string& w) {
    return raag::word_to_string(raag::normal_form(g, raag::parse_word(w)));
}

Word random_word(std::mt19937_64& rng, int generators, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, generators - 1);
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back({gen(rng), rng() % 2 ? +1 : -1});
    return w;
}

}  // namespace

TEST_CASE("word parsing and printing round trip") {
    CHECK(raag::word_to_string(raag::parse_word("a0 a1^-1 a2")) == "a0 a1^-1 a2");
    CHECK(raag::parse_word("").empty());
    CHECK_THROWS_AS(raag::parse_word("b1"), Error);
    CHECK_THROWS_AS(raag::parse_word("a"), Error);
    CHECK_THROWS_AS(raag::parse_word("a1^-2"), Error);
}

TEST_CASE("commuting generators sort into index order") {
    CHECK(nf_str(edge_graph(), "a1 a0") == "a0 a1");
}

TEST_CASE("free reduction kills cancelling pairs") {
    CHECK(nf_str(edge_graph(), "a0 a0^-1") == "");
    CHECK(nf_str(free_graph(2), "a0 a1 a1^-1 a0^-1") == "");
}

TEST_CASE("hidden cancellation through a commuting letter") {
    // b c a b^-1 over the path a-b-c: b commutes past c and a to cancel.
    CHECK(nf_str(path_graph(), "a1 a2 a0 a1^-1") == "a2 a0");
}

TEST_CASE("words_equal examples") {
    CHECK(raag::words_equal(edge_graph(), raag::parse_word("a0 a1"), raag::parse_word("a1 a0")));
    CHECK_FALSE(
        raag::words_equal(free_graph(2), raag::parse_word("a0 a1"), raag::parse_word("a1 a0")));
    CHECK_FALSE(
        raag::words_equal(path_graph(), raag::parse_word("a0 a2"), raag::parse_word("a2 a0")));
}

TEST_CASE("exponent sums") {
    CHECK(raag::exponent_sum(raag::parse_word("a0 a1 a0^-1")) == 1);
    CHECK(raag::exponent_sum({}) == 0);
    CHECK(raag::exponent_sum(raag::parse_word("a0 a1 a2 a1")) == 4);
}

TEST_CASE("generator index out of range is an error") {
    CHECK_THROWS_AS((void)raag::normal_form(edge_graph(), raag::parse_word("a5")), Error);
}

TEST_CASE("normal form is idempotent and preserves the exponent sum") {
    std::mt19937_64 rng(2024);
    for (const auto& sg : SimpleGraph::all_on(3)) {
        CommutationGraph g(sg);
        for (int trial = 0; trial < 40; ++trial) {
            Word w = random_word(rng, 3, 6);
            Word nf = raag::normal_form(g, w);
            CHECK(raag::normal_form(g, nf) == nf);
            CHECK(raag::exponent_sum(nf) == raag::exponent_sum(w));
        }
    }
}

TEST_CASE("complete graphs give free-abelian normal forms") {
    std::mt19937_64 rng(7);
    for (int k = 1; k <= 3; ++k) {
        CommutationGraph g(SimpleGraph::complete(k));
        for (int trial = 0; trial < 60; ++trial) {
            Word w = random_word(rng, k, 6);
            CHECK(raag::normal_form(g, w) == suites::oracle::abelian_sorted(k, w));
        }
    }
}

TEST_CASE("empty graphs give free-group normal forms") {
    std::mt19937_64 rng(8);
    for (int k = 1; k <= 3; ++k) {
        CommutationGraph g(SimpleGraph::empty(k));
        for (int trial = 0; trial < 60; ++trial) {
            Word w = random_word(rng, k, 6);
            CHECK(raag::normal_form(g, w) == suites::oracle::free_reduce(w));
        }
    }
}

TEST_CASE("normal form agrees with the commutation-closure oracle on two generators") {
    // The full <=3-generator sweep runs in the acceptance suite.
    for (const auto& sg : SimpleGraph::all_on(2)) {
        CommutationGraph g(sg);
        suites::oracle::CommutationClosure closure(g, 5);
        std::vector<Word> words{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<Word> next;
            for (const auto& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int gen = 0; gen < 2; ++gen)
                        for (int sign : {+1, -1}) {
                            Word e = w;
                            e.push_back({gen, sign});
                            next.push_back(e);
                        }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& w : words) CHECK(raag::normal_form(g, w) == closure.canonical(w));
    }
}

TEST_CASE("concat and inverse") {
    Word w = raag::parse_word("a0 a1^-1");
    CHECK(raag::word_to_string(raag::inverse(w)) == "a1 a0^-1");
    CHECK(raag::word_to_string(raag::concat(w, raag::inverse(w))) == "a0 a1^-1 a1 a0^-1");
    CHECK(raag::normal_form(free_graph(2), raag::concat(w, raag::inverse(w))).empty());
}
