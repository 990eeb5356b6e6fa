#include "vtcomb/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "vtcomb/errors.hpp"

namespace vt {

LabeledDigraph::LabeledDigraph(std::vector<std::string> vertices, bool oriented)
    : vertices_(std::move(vertices)), oriented_(oriented) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        auto [pos, inserted] = index_.emplace(vertices_[i], static_cast<int>(i));
        (void)pos;
        if (!inserted) throw invalid_input("duplicate vertex label: " + vertices_[i]);
    }
}

int LabeledDigraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw invalid_input("unknown vertex label: " + label);
    return it->second;
}

void LabeledDigraph::add_arc(const std::string& from, const std::string& to) {
    int u = index_of(from);
    int v = index_of(to);
    if (u == v) throw invalid_input("self-arc at " + from);
    if (oriented_ && arcs_.count({v, u}))
        throw invalid_input("oriented digraph already has the reverse arc " + to + " -> " + from);
    arcs_.emplace(u, v);
}

void LabeledDigraph::remove_arc(const std::string& from, const std::string& to) {
    arcs_.erase({index_of(from), index_of(to)});
}

bool LabeledDigraph::has_arc(const std::string& from, const std::string& to) const {
    auto u = index_.find(from);
    auto v = index_.find(to);
    if (u == index_.end() || v == index_.end()) return false;
    return has_arc(u->second, v->second);
}

std::vector<int> LabeledDigraph::out_neighbors(int v) const {
    std::vector<int> out;
    for (auto it = arcs_.lower_bound({v, -1}); it != arcs_.end() && it->first == v; ++it)
        out.push_back(it->second);
    return out;
}

std::vector<int> LabeledDigraph::in_neighbors(int v) const {
    std::vector<int> in;
    for (const auto& [a, b] : arcs_)
        if (b == v) in.push_back(a);
    return in;
}

int LabeledDigraph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

int LabeledDigraph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

LabeledDigraph LabeledDigraph::induced(const std::vector<std::string>& labels) const {
    std::vector<std::string> kept;
    for (const auto& l : labels)
        if (has_vertex(l)) kept.push_back(l);
    LabeledDigraph sub(kept, oriented_);
    for (const auto& [u, v] : arcs_) {
        const auto& lu = label_of(u);
        const auto& lv = label_of(v);
        if (sub.has_vertex(lu) && sub.has_vertex(lv)) sub.add_arc(lu, lv);
    }
    return sub;
}

std::string LabeledDigraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (const auto& v : vertices_) os << "  \"" << v << "\";\n";
    for (const auto& [u, v] : arcs_)
        os << "  \"" << label_of(u) << "\" -> \"" << label_of(v) << "\";\n";
    os << "}\n";
    return os.str();
}

namespace {

// 0 = unvisited, 1 = on stack, 2 = done
bool dfs_cycle(const LabeledDigraph& d, int v, std::vector<int>& state, std::vector<int>& stack,
               std::vector<int>& cycle) {
    state[static_cast<std::size_t>(v)] = 1;
    stack.push_back(v);
    for (int w : d.out_neighbors(v)) {
        if (state[static_cast<std::size_t>(w)] == 1) {
            auto it = std::find(stack.begin(), stack.end(), w);
            cycle.assign(it, stack.end());
            return true;
        }
        if (state[static_cast<std::size_t>(w)] == 0 && dfs_cycle(d, w, state, stack, cycle))
            return true;
    }
    stack.pop_back();
    state[static_cast<std::size_t>(v)] = 2;
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const LabeledDigraph& d) {
    std::vector<int> state(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<int> stack;
    std::vector<int> cycle;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (state[static_cast<std::size_t>(v)] == 0 && dfs_cycle(d, v, state, stack, cycle))
            return cycle;
    return std::nullopt;
}

bool is_acyclic(const LabeledDigraph& d) { return !find_cycle(d).has_value(); }

}  // namespace vt
