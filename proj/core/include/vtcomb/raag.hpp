#ifndef VTCOMB_RAAG_HPP
#define VTCOMB_RAAG_HPP

#include <string>
#include <vector>

#include "vtcomb/simple_graph.hpp"

namespace vt::raag {

// One signed generator occurrence. Letters are ordered by generator index
// ascending with the positive sign before the inverse, which fixes the
// shortlex order used by the normal form.
struct Letter {
    int gen = 0;
    int sign = +1;  // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter& o) const {
        if (gen != o.gen) return gen <=> o.gen;
        return o.sign <=> sign;  // +1 sorts before -1
    }
};

using Word = std::vector<Letter>;

// Text format: whitespace-separated tokens `a3` / `a3^-1`, generator index
// after the `a`. The empty string is the empty word.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);

// Generators of H are the vertices of the graph; adjacent vertices commute.
class CommutationGraph {
public:
    CommutationGraph() = default;
    explicit CommutationGraph(SimpleGraph g) : g_(std::move(g)) {}

    const SimpleGraph& underlying() const { return g_; }
    int generator_count() const { return g_.vertex_count(); }

    // Distinct generators that commute as letters.
    bool commute(int gen_a, int gen_b) const { return g_.adjacent(gen_a, gen_b); }

    void check_word(const Word& w) const;

private:
    SimpleGraph g_;
};

// Canonical coset representative: freely reduced (no cancelling pair can be
// brought together by commutation moves) and shortlex-minimal within its
// commutation class. Two words get equal normal forms iff they represent the
// same element of the group.
Word normal_form(const CommutationGraph& g, const Word& w);

bool words_equal(const CommutationGraph& g, const Word& w1, const Word& w2);

// Sum of the letter signs.
long long exponent_sum(const Word& w);

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);

}  // namespace vt::raag

#endif
