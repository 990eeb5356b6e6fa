#include <doctest.h>

#include <random>

#include "vtcomb/digraph.hpp"
#include "vtcomb/errors.hpp"
#include "vtcomb/isomorphism.hpp"
#include "vtcomb/json_io.hpp"
#include "vtcomb/simple_graph.hpp"

using namespace vt;

namespace {

LabeledDigraph directed_cycle(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    LabeledDigraph d(labels);
    for (int i = 0; i < n; ++i) d.add_arc(labels[i], labels[(i + 1) % n]);
    return d;
}

LabeledDigraph directed_path(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    LabeledDigraph d(labels);
    for (int i = 0; i + 1 < n; ++i) d.add_arc(labels[i], labels[i + 1]);
    return d;
}

LabeledDigraph random_digraph(std::mt19937_64& rng, int n, double p = 0.4) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
    LabeledDigraph d(labels);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng)) d.add_arc(labels[i], labels[j]);
    return d;
}

LabeledDigraph relabeled(const LabeledDigraph& d, const std::vector<int>& perm,
                         const std::string& prefix) {
    std::vector<std::string> labels(static_cast<std::size_t>(d.vertex_count()));
    for (int i = 0; i < d.vertex_count(); ++i)
        labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            prefix + std::to_string(perm[static_cast<std::size_t>(i)]);
    LabeledDigraph out(labels);
    for (const auto& [u, v] : d.arcs())
        out.add_arc(prefix + std::to_string(perm[static_cast<std::size_t>(u)]),
                    prefix + std::to_string(perm[static_cast<std::size_t>(v)]));
    return out;
}

}  // namespace

TEST_CASE("directed 3-cycle and 3-path are not isomorphic") {
    CHECK_FALSE(are_isomorphic(directed_cycle(3), directed_path(3)).has_value());
}

TEST_CASE("every digraph is isomorphic to itself via the identity") {
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 6; ++n) {
        auto d = random_digraph(rng, n);
        auto w = are_isomorphic(d, d);
        REQUIRE(w.has_value());
        CHECK(w->mapping == IsoWitness::identity(d).mapping);
    }
}

TEST_CASE("a relabeled 3-cycle is found isomorphic with a valid witness") {
    auto c = directed_cycle(3);
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (const auto& p : perms) {
        auto other = relabeled(c, p, "x");
        auto w = are_isomorphic(c, other);
        REQUIRE(w.has_value());
        CHECK(verify_witness(c, other, *w));
    }
}

TEST_CASE("are_isomorphic behaves like an equivalence on random digraphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto a = random_digraph(rng, n);

        std::vector<int> p1(static_cast<std::size_t>(n));
        std::vector<int> p2(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p1[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i)] = i;
        std::shuffle(p1.begin(), p1.end(), rng);
        std::shuffle(p2.begin(), p2.end(), rng);
        auto b = relabeled(a, p1, "b");
        auto c = relabeled(a, p2, "c");

        auto ab = are_isomorphic(a, b);
        auto bc = are_isomorphic(b, c);
        REQUIRE(ab.has_value());
        REQUIRE(bc.has_value());

        // Symmetric: the inverted witness works backwards.
        CHECK(verify_witness(b, a, ab->inverted()));
        // Transitive: composition is a witness a -> c.
        CHECK(verify_witness(a, c, ab->composed_with(*bc)));
    }
}

TEST_CASE("witness verification rejects corrupted mappings") {
    auto c = directed_cycle(4);
    auto w = are_isomorphic(c, c);
    REQUIRE(w.has_value());
    IsoWitness bad = *w;
    bad.mapping["c0"] = "c2";
    bad.mapping["c2"] = "c0";
    CHECK_FALSE(verify_witness(c, c, bad));
}

TEST_CASE("oracle size cap turns blowup into an error") {
    std::mt19937_64 rng(5);
    auto big = random_digraph(rng, 13);
    CHECK_THROWS_AS((void)are_isomorphic(big, big), Error);
    CHECK_NOTHROW((void)are_isomorphic(big, big, 13));
}

TEST_CASE("graph_isomorphic examples") {
    auto k3 = SimpleGraph::complete(3);
    auto p3 = SimpleGraph::path(3);
    CHECK_FALSE(graph_isomorphic(k3, p3));  // edge counts differ
    CHECK(graph_isomorphic(SimpleGraph::empty(4), SimpleGraph::empty(4)));
    SimpleGraph two_edges(3, {{0, 1}, {1, 2}});
    SimpleGraph one_edge(3, {{0, 1}});
    CHECK_FALSE(graph_isomorphic(two_edges, one_edge));
    CHECK(graph_isomorphic(two_edges, SimpleGraph(3, {{0, 2}, {1, 2}})));
    CHECK_THROWS_AS((void)graph_isomorphic(SimpleGraph::empty(9), SimpleGraph::empty(9)), Error);
}

TEST_CASE("simple graph invariants are enforced") {
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(SimpleGraph(2, {{0, 5}}), Error);
    SimpleGraph g(3, {{1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);  // normalized, deduplicated
}

TEST_CASE("digraph invariants: labels unique, no self arcs, oriented flag") {
    CHECK_THROWS_AS(LabeledDigraph({"a", "a"}), Error);
    LabeledDigraph d({"a", "b"});
    CHECK_THROWS_AS(d.add_arc("a", "a"), Error);
    LabeledDigraph o({"a", "b"}, /*oriented=*/true);
    o.add_arc("a", "b");
    CHECK_THROWS_AS(o.add_arc("b", "a"), Error);
}

TEST_CASE("digraph JSON round trip and DOT export") {
    auto c = directed_cycle(3);
    auto j = io::digraph_to_json(c);
    auto back = io::digraph_from_json(j);
    CHECK(back == c);
    auto dot = c.to_dot("g");
    CHECK(dot.find("\"c0\" -> \"c1\"") != std::string::npos);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = random_digraph(rng, 5);
        CHECK(io::digraph_from_json(io::digraph_to_json(d)) == d);
    }
}

TEST_CASE("acyclicity detector") {
    CHECK(is_acyclic(directed_path(4)));
    CHECK_FALSE(is_acyclic(directed_cycle(3)));
    auto cyc = find_cycle(directed_cycle(5));
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 5);
}
