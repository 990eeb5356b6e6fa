#include "vtcomb/poset.hpp"

#include <vector>

#include "vtcomb/errors.hpp"

namespace vt::poset {

ClosedDigraph::ClosedDigraph(LabeledDigraph d, std::optional<std::string> provenance)
    : d_(std::move(d)), provenance_(std::move(provenance)) {
    if (!is_acyclic(d_)) throw cycle_error("closed digraph must be acyclic");
    for (const auto& [u, v] : d_.arcs())
        for (int w : d_.out_neighbors(v))
            if (!d_.has_arc(u, w))
                throw invalid_input("arc set is not transitively closed: " + d_.label_of(u) +
                                    " -> " + d_.label_of(v) + " -> " + d_.label_of(w));
}

ClosedDigraph transitive_closure(const LabeledDigraph& d, std::optional<std::string> provenance) {
    if (auto cycle = find_cycle(d)) {
        std::string desc;
        for (int v : *cycle) desc += d.label_of(v) + " -> ";
        desc += d.label_of(cycle->front());
        throw cycle_error(
            "transitive closure of a digraph is a partial order only when the digraph has no "
            "directed cycles; found: " +
            desc);
    }

    const int n = d.vertex_count();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& [u, v] : d.arcs()) reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }

    LabeledDigraph closed(d.vertices(), /*oriented=*/true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                closed.add_arc(d.label_of(i), d.label_of(j));
    return ClosedDigraph(std::move(closed), std::move(provenance));
}

LabeledDigraph recover_generator_arcs(const ClosedDigraph& p) {
    const auto& d = p.digraph();
    LabeledDigraph out(d.vertices(), /*oriented=*/true);
    for (const auto& [u, v] : d.arcs()) {
        bool two_step = false;
        for (int w : d.out_neighbors(u))
            if (w != v && d.has_arc(w, v)) {
                two_step = true;
                break;
            }
        if (!two_step) out.add_arc(d.label_of(u), d.label_of(v));
    }
    return out;
}

}  // namespace vt::poset
