#ifndef VTCOMB_DIGRAPH_HPP
#define VTCOMB_DIGRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vt {

// Finite directed graph on opaque string labels. No self-arcs. When the
// `oriented` flag is set, at most one of (u,v) and (v,u) may be present.
// Arcs are kept as a sorted set of index pairs so iteration order, JSON and
// DOT output are deterministic.
class LabeledDigraph {
public:
    LabeledDigraph() = default;
    explicit LabeledDigraph(std::vector<std::string> vertices, bool oriented = false);

    void add_arc(const std::string& from, const std::string& to);
    void remove_arc(const std::string& from, const std::string& to);

    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }
    bool has_arc(const std::string& from, const std::string& to) const;
    bool has_arc(int from, int to) const { return arcs_.count({from, to}) > 0; }

    int index_of(const std::string& label) const;
    const std::string& label_of(int index) const { return vertices_.at(static_cast<std::size_t>(index)); }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;

    bool oriented_flag() const { return oriented_; }

    // Arc-induced restriction to a label subset (labels not present are ignored).
    LabeledDigraph induced(const std::vector<std::string>& labels) const;

    std::string to_dot(const std::string& name = "g") const;

    bool operator==(const LabeledDigraph& o) const {
        return vertices_ == o.vertices_ && arcs_ == o.arcs_;
    }

private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, int> index_;
    std::set<std::pair<int, int>> arcs_;
    bool oriented_ = false;
};

// True iff d has no directed cycle.
bool is_acyclic(const LabeledDigraph& d);

// Some directed cycle as a vertex-index sequence, if one exists.
std::optional<std::vector<int>> find_cycle(const LabeledDigraph& d);

}  // namespace vt

#endif
