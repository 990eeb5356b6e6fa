#ifndef VTCOMB_CAYLEY_HPP
#define VTCOMB_CAYLEY_HPP

#include <string>
#include <vector>

#include "vtcomb/digraph.hpp"
#include "vtcomb/raag.hpp"

namespace vt::cayley {

// Radius-r ball of the directed Cayley graph of H around the identity.
// Vertices are normal-form strings of every element of word length <= r;
// there is an arc u -> v exactly when v = g_i * u for some generator g_i
// (left multiplication) and both endpoints lie in the ball.
struct CayleyBall {
    raag::CommutationGraph graph;
    int radius = 0;
    LabeledDigraph digraph;
    std::string center;  // label of the identity: the empty word ""

    // Normal-form word per vertex index, in label order.
    std::vector<raag::Word> words;

    int word_length(int vertex) const { return static_cast<int>(words.at(static_cast<std::size_t>(vertex)).size()); }
};

// Breadth-first generation over left multiplication by the g_i^{+-1}.
// Deterministic labeling (BFS level by level, generators in index order,
// positive sign first). Throws vt::size_cap if the ball exceeds `cap`.
CayleyBall cayley_ball(const raag::CommutationGraph& g, int radius, int cap = 20000);

// Finite-scale vertex-transitivity surrogate: for every vertex v of word
// length <= ball.radius - r_small, right multiplication u -> u*v must carry
// the radius-r_small sub-ball around the identity arc-exactly onto the
// radius-r_small sub-ball around v. Requires r_small <= ball.radius / 2.
bool check_local_transitivity(const CayleyBall& ball, int r_small);

// True iff the ball's digraph has no directed cycle AND every arc raises the
// exponent sum by exactly one (the grading that explains acyclicity).
bool check_acyclic(const CayleyBall& ball);

// Arc-by-arc grading check alone.
bool check_grading(const CayleyBall& ball);

}  // namespace vt::cayley

#endif
