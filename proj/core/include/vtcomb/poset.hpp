#ifndef VTCOMB_POSET_HPP
#define VTCOMB_POSET_HPP

#include <optional>
#include <string>

#include "vtcomb/digraph.hpp"

namespace vt::poset {

// Transitively closed acyclic digraph; a strict partial order under
// "x < y iff x -> y". Construction validates both properties.
class ClosedDigraph {
public:
    explicit ClosedDigraph(LabeledDigraph d, std::optional<std::string> provenance = std::nullopt);

    const LabeledDigraph& digraph() const { return d_; }
    const std::optional<std::string>& provenance() const { return provenance_; }

private:
    LabeledDigraph d_;
    std::optional<std::string> provenance_;
};

// Adds an arc u -> v whenever a directed path of length >= 1 exists.
// The input must be acyclic (that is the partial-order hypothesis); a
// directed cycle raises vt::cycle_error.
ClosedDigraph transitive_closure(const LabeledDigraph& d,
                                 std::optional<std::string> provenance = std::nullopt);

// Keeps an arc v -> b of the closure iff no two-step path v -> w -> b exists
// in the closure. Applied at every vertex, this recovers the generator arcs
// of a Cayley ball on its interior.
LabeledDigraph recover_generator_arcs(const ClosedDigraph& p);

}  // namespace vt::poset

#endif
