#ifndef VTCOMB_SIMPLE_GRAPH_HPP
#define VTCOMB_SIMPLE_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vt {

// Finite simple graph on vertices 0..n-1. Edges are stored as normalized
// (i < j) pairs; construction rejects self-loops and out-of-range endpoints.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n) { validate(); }
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool adjacent(int u, int v) const;
    std::vector<int> degrees() const;

    // Image of this graph under a vertex permutation (perm[i] = new name of i).
    SimpleGraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const SimpleGraph& o) const = default;

    // All graphs on exactly n labeled vertices, in a fixed enumeration order.
    static std::vector<SimpleGraph> all_on(int n);
    static SimpleGraph complete(int n);
    static SimpleGraph empty(int n);
    static SimpleGraph path(int n);

private:
    void validate() const;

    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

// Exhaustive edge-preserving-bijection search. Throws vt::oracle_too_large
// when the vertex count exceeds the cap.
bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int cap = 8);

}  // namespace vt

#endif
