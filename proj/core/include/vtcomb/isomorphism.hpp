#ifndef VTCOMB_ISOMORPHISM_HPP
#define VTCOMB_ISOMORPHISM_HPP

#include <map>
#include <optional>
#include <string>

#include "vtcomb/digraph.hpp"

namespace vt {

// Arc-preserving bijection between two vertex sets, keyed by label.
struct IsoWitness {
    std::map<std::string, std::string> mapping;

    IsoWitness inverted() const;
    // Composition: first apply *this, then `next`.
    IsoWitness composed_with(const IsoWitness& next) const;

    static IsoWitness identity(const LabeledDigraph& d);
};

// Checks, independently of any search, that `w` maps arcs to arcs and
// non-arcs to non-arcs in both directions.
bool verify_witness(const LabeledDigraph& a, const LabeledDigraph& b, const IsoWitness& w);

// Exhaustive permutation search with degree-sequence pruning. Deterministic:
// the first witness in a fixed enumeration order (vertices of `a` in stored
// order, candidates in stored order of `b`). Every returned witness has been
// re-checked by verify_witness. Throws vt::oracle_too_large above the cap.
std::optional<IsoWitness> are_isomorphic(const LabeledDigraph& a, const LabeledDigraph& b,
                                         int cap = 12);

}  // namespace vt

#endif
