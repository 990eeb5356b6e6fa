#include <doctest.h>

#include <random>

#include "vtcomb/cayley.hpp"
#include "vtcomb/errors.hpp"
#include "vtcomb/isomorphism.hpp"
#include "vtcomb/poset.hpp"
#include "vtcomb/raag.hpp"

using namespace vt;
using poset::recover_generator_arcs;
using poset::transitive_closure;

namespace {

// Independent reachability oracle: boolean matrix squaring.
std::vector<std::vector<bool>> reach_by_squaring(const LabeledDigraph& d) {
    int n = d.vertex_count();
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& [u, v] : d.arcs()) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    for (int round = 0; round < 16; ++round) {  // 2^16 >= any path length here
        auto next = m;
        bool changed = false;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
                for (int j = 0; j < n; ++j)
                    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] &&
                        !next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                        next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                        changed = true;
                    }
            }
        m = std::move(next);
        if (!changed) break;
    }
    return m;
}

LabeledDigraph chain3() {
    LabeledDigraph d({"1", "2", "3"});
    d.add_arc("1", "2");
    d.add_arc("2", "3");
    return d;
}

}  // namespace

TEST_CASE("closure of a path adds exactly the long arc") {
    auto closed = transitive_closure(chain3());
    CHECK(closed.digraph().arc_count() == 3);
    CHECK(closed.digraph().has_arc("1", "2"));
    CHECK(closed.digraph().has_arc("2", "3"));
    CHECK(closed.digraph().has_arc("1", "3"));
}

TEST_CASE("closure of an antichain is empty") {
    LabeledDigraph d({"x", "y", "z"});
    CHECK(transitive_closure(d).digraph().arc_count() == 0);
}

TEST_CASE("closure rejects directed cycles") {
    LabeledDigraph d({"a", "b"});
    d.add_arc("a", "b");
    d.add_arc("b", "a");
    CHECK_THROWS_AS((void)transitive_closure(d), Error);
}

TEST_CASE("closure of the Z^2 ball matches coordinatewise dominance and the squaring oracle") {
    raag::CommutationGraph k2{SimpleGraph(2, {{0, 1}})};
    auto ball = cayley::cayley_ball(k2, 2);
    auto closed = transitive_closure(ball.digraph);

    auto coords = [&](int v) {
        long long x = 0;
        long long y = 0;
        for (const auto& l : ball.words[static_cast<std::size_t>(v)])
            (l.gen == 0 ? x : y) += l.sign;
        return std::pair<long long, long long>{x, y};
    };

    auto reach = reach_by_squaring(ball.digraph);
    const auto& d = ball.digraph;
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (u == v) continue;
            bool in_closure = closed.digraph().has_arc(u, v);
            CHECK(in_closure == reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            auto [x1, y1] = coords(u);
            auto [x2, y2] = coords(v);
            CHECK(in_closure == (x1 <= x2 && y1 <= y2));
        }
}

TEST_CASE("closure output is a strict partial order") {
    raag::CommutationGraph path{SimpleGraph(3, {{0, 1}, {1, 2}})};
    auto ball = cayley::cayley_ball(path, 2);
    auto closed = transitive_closure(ball.digraph);
    const auto& d = closed.digraph();
    for (const auto& [u, v] : d.arcs()) {
        CHECK(u != v);                 // irreflexive
        CHECK_FALSE(d.has_arc(v, u));  // asymmetric (acyclic)
        for (int w : d.out_neighbors(v)) CHECK(d.has_arc(u, w));  // transitive
    }
}

TEST_CASE("recovery strips exactly the composite arcs of a chain") {
    auto rec = recover_generator_arcs(transitive_closure(chain3()));
    CHECK(rec.arc_count() == 2);
    CHECK(rec.has_arc("1", "2"));
    CHECK(rec.has_arc("2", "3"));
}

TEST_CASE("recovery of an empty order is empty") {
    LabeledDigraph d({"x", "y"});
    CHECK(recover_generator_arcs(transitive_closure(d)).arc_count() == 0);
}

TEST_CASE("round trip on the path-graph ball, interior margin one") {
    raag::CommutationGraph path{SimpleGraph(3, {{0, 1}, {1, 2}})};
    const int radius = 2;
    auto ball = cayley::cayley_ball(path, radius);
    auto rec = recover_generator_arcs(transitive_closure(ball.digraph));

    const auto& d = ball.digraph;
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (u == v) continue;
            if (ball.word_length(u) > radius - 1 || ball.word_length(v) > radius - 1) continue;
            CHECK(d.has_arc(u, v) == rec.has_arc(d.label_of(u), d.label_of(v)));
        }
}

TEST_CASE("closure is isomorphism invariant") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        // Random DAG: arcs only forward along a fixed vertex order.
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        LabeledDigraph d(labels);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) d.add_arc(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);

        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> plabels(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            plabels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = "w" + std::to_string(i);
        LabeledDigraph e(plabels);
        for (const auto& [u, v] : d.arcs())
            e.add_arc("w" + std::to_string(u), "w" + std::to_string(v));

        REQUIRE(are_isomorphic(d, e).has_value());
        CHECK(are_isomorphic(transitive_closure(d).digraph(), transitive_closure(e).digraph())
                  .has_value());
    }
}

TEST_CASE("ClosedDigraph construction validates closedness") {
    auto not_closed = chain3();  // missing 1 -> 3
    CHECK_THROWS_AS((poset::ClosedDigraph{not_closed}), Error);
}
