#include "vtcomb/isomorphism.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "vtcomb/errors.hpp"

namespace vt {

IsoWitness IsoWitness::inverted() const {
    IsoWitness w;
    for (const auto& [from, to] : mapping) w.mapping[to] = from;
    return w;
}

IsoWitness IsoWitness::composed_with(const IsoWitness& next) const {
    IsoWitness w;
    for (const auto& [from, mid] : mapping) w.mapping[from] = next.mapping.at(mid);
    return w;
}

IsoWitness IsoWitness::identity(const LabeledDigraph& d) {
    IsoWitness w;
    for (const auto& v : d.vertices()) w.mapping[v] = v;
    return w;
}

bool verify_witness(const LabeledDigraph& a, const LabeledDigraph& b, const IsoWitness& w) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (w.mapping.size() != static_cast<std::size_t>(a.vertex_count())) return false;

    std::map<std::string, std::string> inverse;
    for (const auto& [from, to] : w.mapping) {
        if (!a.has_vertex(from) || !b.has_vertex(to)) return false;
        if (!inverse.emplace(to, from).second) return false;  // not injective
    }
    for (const auto& u : a.vertices())
        for (const auto& v : a.vertices()) {
            if (u == v) continue;
            if (a.has_arc(u, v) != b.has_arc(w.mapping.at(u), w.mapping.at(v))) return false;
        }
    return true;
}

namespace {

struct SearchState {
    const LabeledDigraph& a;
    const LabeledDigraph& b;
    std::vector<int> map;    // a-index -> b-index or -1
    std::vector<bool> used;  // b-index taken
};

bool extend(SearchState& s, int next) {
    const int n = s.a.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (s.used[static_cast<std::size_t>(cand)]) continue;
        if (s.a.out_degree(next) != s.b.out_degree(cand) ||
            s.a.in_degree(next) != s.b.in_degree(cand))
            continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            int pc = s.map[static_cast<std::size_t>(prev)];
            if (s.a.has_arc(prev, next) != s.b.has_arc(pc, cand)) ok = false;
            if (s.a.has_arc(next, prev) != s.b.has_arc(cand, pc)) ok = false;
        }
        if (!ok) continue;
        s.map[static_cast<std::size_t>(next)] = cand;
        s.used[static_cast<std::size_t>(cand)] = true;
        if (extend(s, next + 1)) return true;
        s.used[static_cast<std::size_t>(cand)] = false;
        s.map[static_cast<std::size_t>(next)] = -1;
    }
    return false;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const LabeledDigraph& a, const LabeledDigraph& b,
                                         int cap) {
    if (a.vertex_count() > cap || b.vertex_count() > cap)
        throw oracle_too_large("are_isomorphic: " + std::to_string(a.vertex_count()) + "/" +
                               std::to_string(b.vertex_count()) + " vertices exceeds cap " +
                               std::to_string(cap) + " (exhaustive search)");
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    if (a.arc_count() != b.arc_count()) return std::nullopt;

    auto degree_profile = [](const LabeledDigraph& d) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < d.vertex_count(); ++v) p.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (degree_profile(a) != degree_profile(b)) return std::nullopt;

    SearchState s{a, b, std::vector<int>(static_cast<std::size_t>(a.vertex_count()), -1),
                  std::vector<bool>(static_cast<std::size_t>(a.vertex_count()), false)};
    if (!extend(s, 0)) return std::nullopt;

    IsoWitness w;
    for (int i = 0; i < a.vertex_count(); ++i)
        w.mapping[a.label_of(i)] = b.label_of(s.map[static_cast<std::size_t>(i)]);
    assert(verify_witness(a, b, w));
    if (!verify_witness(a, b, w)) throw Error("internal", "witness failed re-verification");
    return w;
}

}  // namespace vt
