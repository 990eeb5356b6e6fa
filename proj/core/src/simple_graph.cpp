#include "vtcomb/simple_graph.hpp"

#include <algorithm>
#include <numeric>

#include "vtcomb/errors.hpp"

namespace vt {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    for (auto [u, v] : edges) {
        if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace(u, v);
    }
    validate();
}

void SimpleGraph::validate() const {
    if (n_ < 0) throw invalid_input("negative vertex count");
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw invalid_input("edge endpoint out of range");
    }
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        ++d[static_cast<std::size_t>(u)];
        ++d[static_cast<std::size_t>(v)];
    }
    return d;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_)
        es.emplace_back(perm.at(static_cast<std::size_t>(u)), perm.at(static_cast<std::size_t>(v)));
    return SimpleGraph(n_, es);
}

std::vector<SimpleGraph> SimpleGraph::all_on(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask & (1ull << s)) es.push_back(slots[s]);
        out.emplace_back(n, es);
    }
    return out;
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::empty(int n) { return SimpleGraph(n); }

SimpleGraph SimpleGraph::path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return SimpleGraph(n, es);
}

namespace {

bool extend(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& map,
            std::vector<bool>& used, int next) {
    const int n = a.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.adjacent(prev, next) != b.adjacent(map[static_cast<std::size_t>(prev)], cand))
                ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (extend(a, b, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

}  // namespace

bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int cap) {
    if (a.vertex_count() > cap || b.vertex_count() > cap)
        throw oracle_too_large("graph_isomorphic: " + std::to_string(a.vertex_count()) + "/" +
                               std::to_string(b.vertex_count()) + " vertices exceeds cap " +
                               std::to_string(cap));
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.vertex_count()), false);
    return extend(a, b, map, used, 0);
}

}  // namespace vt
