#include <doctest.h>

#include <set>

#include "vtcomb/cayley.hpp"
#include "vtcomb/errors.hpp"
#include "vtcomb/isomorphism.hpp"
#include "vtcomb/raag.hpp"

using namespace vt;
using cayley::CayleyBall;
using cayley::cayley_ball;
using raag::CommutationGraph;

namespace {

CommutationGraph free2() { return CommutationGraph(SimpleGraph::empty(2)); }
CommutationGraph k2() { return CommutationGraph(SimpleGraph(2, {{0, 1}})); }

}  // namespace

TEST_CASE("free-group ball of radius 1: five vertices and four arcs") {
    auto ball = cayley_ball(free2(), 1);
    std::set<std::string> labels(ball.digraph.vertices().begin(), ball.digraph.vertices().end());
    CHECK(labels == std::set<std::string>{"", "a0", "a1", "a0^-1", "a1^-1"});
    CHECK(ball.digraph.arc_count() == 4);
    CHECK(ball.digraph.has_arc("a0^-1", ""));
    CHECK(ball.digraph.has_arc("a1^-1", ""));
    CHECK(ball.digraph.has_arc("", "a0"));
    CHECK(ball.digraph.has_arc("", "a1"));
}

TEST_CASE("ball sizes: Z^2 diamond and free-group growth") {
    CHECK(cayley_ball(k2(), 2).digraph.vertex_count() == 13);
    CHECK(cayley_ball(free2(), 2).digraph.vertex_count() == 17);
    CHECK(cayley_ball(free2(), 0).digraph.vertex_count() == 1);
}

TEST_CASE("vertex cap aborts oversized balls") {
    CommutationGraph f3{SimpleGraph::empty(3)};
    CHECK_THROWS_AS((void)cayley_ball(f3, 5, 100), Error);
}

TEST_CASE("local transitivity on sub-balls") {
    auto ball = cayley_ball(k2(), 2);
    CHECK(cayley::check_local_transitivity(ball, 0));
    CHECK(cayley::check_local_transitivity(ball, 1));
    CHECK_THROWS_AS((void)cayley::check_local_transitivity(ball, 2), Error);  // r_small > r/2

    // Deleting one arc must break right-translation exactness.
    CayleyBall broken = ball;
    broken.digraph.remove_arc("", "a0");
    CHECK_FALSE(cayley::check_local_transitivity(broken, 1));
}

TEST_CASE("balls are acyclic and graded") {
    for (const auto& sg : SimpleGraph::all_on(2)) {
        auto ball = cayley_ball(CommutationGraph(sg), 3);
        CHECK(cayley::check_acyclic(ball));
        CHECK(cayley::check_grading(ball));
        // Grading, arc by arc, recomputed from the stored words.
        for (const auto& [u, v] : ball.digraph.arcs())
            CHECK(raag::exponent_sum(ball.words[static_cast<std::size_t>(v)]) ==
                  raag::exponent_sum(ball.words[static_cast<std::size_t>(u)]) + 1);
    }
}

TEST_CASE("an injected backwards arc breaks acyclicity") {
    auto ball = cayley_ball(k2(), 1);
    // Rebuild the digraph without the orientation guard to inject e -> a0 -> e.
    LabeledDigraph tampered(ball.digraph.vertices(), /*oriented=*/false);
    for (const auto& [u, v] : ball.digraph.arcs())
        tampered.add_arc(ball.digraph.label_of(u), ball.digraph.label_of(v));
    tampered.add_arc("a0", "");
    CayleyBall broken = ball;
    broken.digraph = tampered;
    CHECK_FALSE(cayley::check_acyclic(broken));
}

TEST_CASE("radius-1 balls of isomorphic graphs are isomorphic") {
    SimpleGraph g1(3, {{0, 1}});
    SimpleGraph g2(3, {{1, 2}});
    auto b1 = cayley_ball(CommutationGraph(g1), 1);
    auto b2 = cayley_ball(CommutationGraph(g2), 1);
    CHECK(are_isomorphic(b1.digraph, b2.digraph).has_value());
}

TEST_CASE("deterministic labeling: rebuilding gives identical digraphs") {
    auto a = cayley_ball(free2(), 3);
    auto b = cayley_ball(free2(), 3);
    CHECK(a.digraph == b.digraph);
}
