#include "vtcomb/cayley.hpp"

#include <map>
#include <set>

#include "vtcomb/errors.hpp"

namespace vt::cayley {

using raag::Letter;
using raag::Word;

CayleyBall cayley_ball(const raag::CommutationGraph& g, int radius, int cap) {
    if (radius < 0) throw invalid_input("radius must be nonnegative");

    std::vector<std::string> labels;
    std::vector<Word> words;
    std::map<std::string, int> seen;

    auto insert = [&](const Word& w) -> bool {
        std::string key = raag::word_to_string(w);
        if (seen.count(key)) return false;
        if (static_cast<int>(labels.size()) >= cap)
            throw size_cap("cayley ball exceeds vertex cap " + std::to_string(cap));
        seen.emplace(key, static_cast<int>(labels.size()));
        labels.push_back(key);
        words.push_back(w);
        return true;
    };

    insert(Word{});
    std::vector<Word> frontier{Word{}};
    for (int level = 1; level <= radius; ++level) {
        std::vector<Word> next;
        for (const auto& u : frontier) {
            for (int i = 0; i < g.generator_count(); ++i) {
                for (int sign : {+1, -1}) {
                    Word w = raag::normal_form(g, raag::concat(Word{{i, sign}}, u));
                    if (static_cast<int>(w.size()) != level) continue;  // stepped back inward
                    if (insert(w)) next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }

    CayleyBall ball;
    ball.graph = g;
    ball.radius = radius;
    ball.center = "";
    ball.words = words;
    ball.digraph = LabeledDigraph(labels, /*oriented=*/true);
    for (std::size_t ui = 0; ui < words.size(); ++ui) {
        for (int i = 0; i < g.generator_count(); ++i) {
            Word v = raag::normal_form(g, raag::concat(Word{{i, +1}}, words[ui]));
            auto it = seen.find(raag::word_to_string(v));
            if (it != seen.end()) ball.digraph.add_arc(labels[ui], it->first);
        }
    }
    return ball;
}

bool check_local_transitivity(const CayleyBall& ball, int r_small) {
    if (r_small < 0 || 2 * r_small > ball.radius)
        throw invalid_input("check_local_transitivity requires 0 <= r_small <= radius/2");

    const auto& d = ball.digraph;
    const auto& g = ball.graph;

    std::vector<int> small_ball;  // identity sub-ball, by vertex index
    for (int v = 0; v < d.vertex_count(); ++v)
        if (ball.word_length(v) <= r_small) small_ball.push_back(v);

    for (int c = 0; c < d.vertex_count(); ++c) {
        if (ball.word_length(c) > ball.radius - r_small) continue;
        const Word& center = ball.words[static_cast<std::size_t>(c)];
        const Word center_inv = raag::inverse(center);

        // phi(u) = u * center
        std::map<int, int> phi;
        std::set<int> image;
        for (int u : small_ball) {
            Word t = raag::normal_form(g, raag::concat(ball.words[static_cast<std::size_t>(u)], center));
            int ti = d.index_of(raag::word_to_string(t));  // |u*v| <= r, always present
            phi[u] = ti;
            image.insert(ti);
        }
        if (image.size() != small_ball.size()) return false;

        // Image must be exactly the metric sub-ball around the center:
        // d(y, center) = |y * center^-1|.
        for (int y = 0; y < d.vertex_count(); ++y) {
            Word diff = raag::normal_form(g, raag::concat(ball.words[static_cast<std::size_t>(y)], center_inv));
            bool in_metric_ball = static_cast<int>(diff.size()) <= r_small;
            if (in_metric_ball != (image.count(y) > 0)) return false;
        }

        for (int u1 : small_ball)
            for (int u2 : small_ball) {
                if (u1 == u2) continue;
                if (d.has_arc(u1, u2) != d.has_arc(phi[u1], phi[u2])) return false;
            }
    }
    return true;
}

bool check_grading(const CayleyBall& ball) {
    for (const auto& [u, v] : ball.digraph.arcs()) {
        long long su = raag::exponent_sum(ball.words[static_cast<std::size_t>(u)]);
        long long sv = raag::exponent_sum(ball.words[static_cast<std::size_t>(v)]);
        if (sv != su + 1) return false;
    }
    return true;
}

bool check_acyclic(const CayleyBall& ball) {
    return is_acyclic(ball.digraph) && check_grading(ball);
}

}  // namespace vt::cayley
