#include "vtcomb/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vtcomb/cayley.hpp"
#include "vtcomb/errors.hpp"
#include "vtcomb/isomorphism.hpp"
#include "vtcomb/order_code.hpp"
#include "vtcomb/ordinal.hpp"
#include "vtcomb/poset.hpp"
#include "vtcomb/symbolic_order.hpp"
#include "vtcomb/tournament.hpp"
#include "vtcomb/zelement.hpp"

namespace vt::suites {

using raag::CommutationGraph;
using raag::Letter;
using raag::Word;

namespace {

// Compact word key: one char per letter, ordered like Letter's shortlex.
std::string word_key(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (const auto& l : w)
        s.push_back(static_cast<char>('A' + 2 * l.gen + (l.sign < 0 ? 1 : 0)));
    return s;
}

// Shortlex on keys: length first, then bytes.
bool key_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<Word> all_words(int generators, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int g = 0; g < generators; ++g)
                for (int sign : {+1, -1}) {
                    Word w = out[i];
                    w.push_back({g, sign});
                    out.push_back(std::move(w));
                }
        level_begin = level_end;
    }
    return out;
}

std::string fmt_graph(const SimpleGraph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges={";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) os << ",";
        os << u << "-" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

namespace oracle {

int CommutationClosure::find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
}

CommutationClosure::CommutationClosure(const CommutationGraph& g, int max_len) {
    words_ = all_words(g.generator_count(), max_len);
    parent_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        parent_[i] = static_cast<int>(i);
        index_.emplace(word_key(words_[i]), static_cast<int>(i));
    }

    auto unite = [&](int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra != rb) parent_[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    };

    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word& w = words_[i];
        // Adjacent commuting swaps.
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (!g.commute(w[p].gen, w[p + 1].gen)) continue;
            Word s = w;
            std::swap(s[p], s[p + 1]);
            unite(static_cast<int>(i), index_.at(word_key(s)));
        }
        // Free reductions (insertions are their reverses within the universe).
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (!(w[p].gen == w[p + 1].gen && w[p].sign == -w[p + 1].sign)) continue;
            Word s = w;
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(p),
                    s.begin() + static_cast<std::ptrdiff_t>(p) + 2);
            unite(static_cast<int>(i), index_.at(word_key(s)));
        }
    }

    component_min_.assign(words_.size(), -1);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        int root = find(static_cast<int>(i));
        int& best = component_min_[static_cast<std::size_t>(root)];
        if (best < 0 || key_less(word_key(words_[i]), word_key(words_[static_cast<std::size_t>(best)])))
            best = static_cast<int>(i);
    }
}

Word CommutationClosure::canonical(const Word& w) const {
    auto it = index_.find(word_key(w));
    if (it == index_.end()) throw invalid_input("word exceeds the closure universe");
    return words_[static_cast<std::size_t>(component_min_[static_cast<std::size_t>(find(it->second))])];
}

Word free_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word abelian_sorted(int generator_count, const Word& w) {
    std::vector<long long> exp(static_cast<std::size_t>(generator_count), 0);
    for (const auto& l : w) exp[static_cast<std::size_t>(l.gen)] += l.sign;
    Word out;
    for (int g = 0; g < generator_count; ++g) {
        long long e = exp[static_cast<std::size_t>(g)];
        for (long long i = 0; i < std::llabs(e); ++i) out.push_back({g, e > 0 ? +1 : -1});
    }
    return out;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// 1. RAAG oracle agreement
// ---------------------------------------------------------------------------

CriterionResult run_raag_oracle(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{1, "raag-oracle", true, {}};
    long long words_checked = 0;
    long long pairs_checked = 0;
    long long mismatches = 0;

    for (int n = 1; n <= 3; ++n) {
        for (const auto& sg : SimpleGraph::all_on(n)) {
            CommutationGraph g(sg);
            oracle::CommutationClosure closure(g, 6);
            auto words = all_words(n, 4);

            std::vector<std::string> nf_keys(words.size());
            std::vector<std::string> oracle_keys(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                nf_keys[i] = word_key(raag::normal_form(g, words[i]));
                oracle_keys[i] = word_key(closure.canonical(words[i]));
                if (nf_keys[i] != oracle_keys[i]) ++mismatches;
                ++words_checked;
            }
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j) {
                    if ((nf_keys[i] == nf_keys[j]) != (oracle_keys[i] == oracle_keys[j]))
                        ++mismatches;
                    ++pairs_checked;
                }
        }
    }

    r.passed = mismatches == 0;
    r.lines.push_back("graphs on <=3 vertices, words of length <=4, closure universe <=6");
    r.lines.push_back("normal forms checked: " + std::to_string(words_checked) +
                      ", word pairs checked: " + std::to_string(pairs_checked) +
                      ", mismatches: " + std::to_string(mismatches));
    return r;
}

// ---------------------------------------------------------------------------
// 2. Abelian / free sanity
// ---------------------------------------------------------------------------

CriterionResult run_abelian_free(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{2, "abelian-free", true, {}};
    long long abelian_checked = 0;
    long long free_checked = 0;
    long long mismatches = 0;

    for (int k = 1; k <= 3; ++k) {
        CommutationGraph complete{SimpleGraph::complete(k)};
        CommutationGraph free_graph{SimpleGraph::empty(k)};
        for (const auto& w : all_words(k, 5)) {
            if (raag::normal_form(complete, w) != oracle::abelian_sorted(k, w)) ++mismatches;
            ++abelian_checked;
            if (raag::normal_form(free_graph, w) != oracle::free_reduce(w)) ++mismatches;
            ++free_checked;
        }
    }

    r.passed = mismatches == 0;
    r.lines.push_back("K_k vs exponent-vector oracle: " + std::to_string(abelian_checked) +
                      " words; empty graph vs free reduction: " + std::to_string(free_checked) +
                      " words; mismatches: " + std::to_string(mismatches));
    return r;
}

// ---------------------------------------------------------------------------
// 3. Grading / acyclicity
// ---------------------------------------------------------------------------

CriterionResult run_grading_acyclicity(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{3, "grading-acyclicity", true, {}};
    long long arcs = 0;
    long long balls = 0;
    long long violations = 0;

    for (int n = 1; n <= 3; ++n)
        for (const auto& sg : SimpleGraph::all_on(n))
            for (int radius = 0; radius <= 3; ++radius) {
                auto ball = cayley::cayley_ball(CommutationGraph(sg), radius);
                ++balls;
                arcs += static_cast<long long>(ball.digraph.arc_count());
                if (!cayley::check_grading(ball)) ++violations;
                if (!is_acyclic(ball.digraph)) ++violations;
            }

    r.passed = violations == 0;
    r.lines.push_back(std::to_string(balls) + " balls (graphs <=3 vertices, r <= 3), " +
                      std::to_string(arcs) + " arcs graded +1, violations: " +
                      std::to_string(violations));
    return r;
}

// ---------------------------------------------------------------------------
// 4. Ball functoriality + discrimination
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<int>> graph_iso_permutation(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
        if (a.relabeled(perm) == b) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Witness for ball(g1) ~ ball(g2) induced by a generator permutation.
IsoWitness ball_witness(const cayley::CayleyBall& b1, const CommutationGraph& g2,
                        const std::vector<int>& perm) {
    IsoWitness w;
    for (const auto& label : b1.digraph.vertices()) {
        Word mapped;
        for (const auto& l : raag::parse_word(label))
            mapped.push_back({perm.at(static_cast<std::size_t>(l.gen)), l.sign});
        w.mapping[label] = raag::word_to_string(raag::normal_form(g2, mapped));
    }
    return w;
}

// A cheap sound certificate that two digraphs are NOT isomorphic, if any.
std::optional<std::string> non_iso_certificate(const LabeledDigraph& a, const LabeledDigraph& b) {
    if (a.vertex_count() != b.vertex_count())
        return "vertex counts " + std::to_string(a.vertex_count()) + " vs " +
               std::to_string(b.vertex_count());
    if (a.arc_count() != b.arc_count())
        return "arc counts " + std::to_string(a.arc_count()) + " vs " +
               std::to_string(b.arc_count());
    auto profile = [](const LabeledDigraph& d) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < d.vertex_count(); ++v) p.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(a) != profile(b)) return std::string("degree profiles differ");
    return std::nullopt;
}

}  // namespace

CriterionResult run_ball_functoriality(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{4, "ball-functoriality", true, {}};

    std::vector<SimpleGraph> graphs;
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : SimpleGraph::all_on(n)) graphs.push_back(g);

    std::vector<cayley::CayleyBall> balls;
    balls.reserve(graphs.size());
    for (const auto& g : graphs) balls.push_back(cayley::cayley_ball(CommutationGraph(g), 2));

    long long positive = 0;
    long long negative = 0;
    long long failures = 0;

    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            auto perm = graph_iso_permutation(graphs[i], graphs[j]);
            if (perm) {
                IsoWitness w = ball_witness(balls[i], CommutationGraph(graphs[j]), *perm);
                bool ok = verify_witness(balls[i].digraph, balls[j].digraph, w);
                if (!ok) {
                    ++failures;
                    r.lines.push_back("FAIL witness: " + fmt_graph(graphs[i]) + " ~ " +
                                      fmt_graph(graphs[j]));
                }
                ++positive;
            } else {
                // Record the minimal distinguishing radius with a sound
                // certificate; radius 1 balls of same-size graphs coincide,
                // so radius 2 is where counting bites.
                std::string found = "not distinguished at r<=2";
                for (int radius = 0; radius <= 2; ++radius) {
                    auto ba = cayley::cayley_ball(CommutationGraph(graphs[i]), radius);
                    auto bb = cayley::cayley_ball(CommutationGraph(graphs[j]), radius);
                    if (auto cert = non_iso_certificate(ba.digraph, bb.digraph)) {
                        found = "r=" + std::to_string(radius) + " (" + *cert + ")";
                        break;
                    }
                }
                r.lines.push_back("distinguished " + fmt_graph(graphs[i]) + " vs " +
                                  fmt_graph(graphs[j]) + ": " + found);
                ++negative;
            }
        }

    r.passed = failures == 0;
    r.lines.insert(r.lines.begin(),
                   "isomorphic pairs verified by witness: " + std::to_string(positive) +
                       ", non-isomorphic pairs logged: " + std::to_string(negative) +
                       ", witness failures: " + std::to_string(failures));
    return r;
}

// ---------------------------------------------------------------------------
// 5. Poset round trip
// ---------------------------------------------------------------------------

CriterionResult run_poset_roundtrip(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{5, "roundtrip-poset", true, {}};
    long long interior_arcs = 0;
    long long mismatches = 0;
    long long balls = 0;

    for (int n = 1; n <= 3; ++n)
        for (const auto& sg : SimpleGraph::all_on(n))
            for (int radius = 0; radius <= 3; ++radius) {
                CommutationGraph g(sg);
                auto ball = cayley::cayley_ball(g, radius);
                ++balls;
                auto closed = poset::transitive_closure(ball.digraph);
                auto recovered = poset::recover_generator_arcs(closed);

                auto interior = [&](int v) { return ball.word_length(v) <= radius - 1; };
                const auto& d = ball.digraph;
                for (int u = 0; u < d.vertex_count(); ++u)
                    for (int v = 0; v < d.vertex_count(); ++v) {
                        if (u == v || !interior(u) || !interior(v)) continue;
                        bool in_ball = d.has_arc(u, v);
                        bool in_rec = recovered.has_arc(d.label_of(u), d.label_of(v));
                        if (in_ball) ++interior_arcs;
                        if (in_ball != in_rec) ++mismatches;
                    }
            }

    r.passed = mismatches == 0;
    r.lines.push_back(std::to_string(balls) + " balls; interior arcs compared: " +
                      std::to_string(interior_arcs) + "; mismatches: " +
                      std::to_string(mismatches));
    return r;
}

// ---------------------------------------------------------------------------
// 6. Z^alpha calculus
// ---------------------------------------------------------------------------

namespace {

using linord::Cmp;
using linord::Ordinal;
using linord::ZElement;

ZElement random_z_element(std::mt19937_64& rng, const Ordinal& alpha) {
    std::uniform_int_distribution<int> size_dist(0, 3);
    std::uniform_int_distribution<int> idx_dist(0, 5);
    std::uniform_int_distribution<long long> val_dist(-9, 9);
    int size = size_dist(rng);
    std::vector<std::pair<Ordinal, long long>> support;
    for (int t = 0; t < size; ++t) {
        Ordinal pos =
            Ordinal::omega_pow(Ordinal::from_nat(1), 1);  // placeholder, replaced below
        for (int attempt = 0; attempt < 16; ++attempt) {
            int i = idx_dist(rng);
            int j = idx_dist(rng);
            Ordinal candidate = (i > 0 ? Ordinal::omega_pow(Ordinal::from_nat(1),
                                                            static_cast<std::uint64_t>(i))
                                       : Ordinal::zero()) +
                                Ordinal::from_nat(static_cast<std::uint64_t>(j));
            if (candidate < alpha) {
                pos = candidate;
                break;
            }
            pos = Ordinal::zero();
        }
        long long v = 0;
        while (v == 0) v = val_dist(rng);
        bool dup = false;
        for (const auto& [p, existing] : support)
            if (p == pos) dup = true;
        if (!dup) support.emplace_back(pos, v);
    }
    return ZElement(std::move(support));
}

}  // namespace

CriterionResult run_zalpha_calculus(std::uint64_t seed) {
    CriterionResult r{6, "zalpha-calculus", true, {}};
    std::mt19937_64 rng(seed);
    long long violations = 0;

    // (a) trichotomy + transitivity on 10^4 random triples, alpha <= w^2.
    const Ordinal w2 = Ordinal::omega_pow(Ordinal::from_nat(2), 1);
    std::uniform_int_distribution<int> adist(1, 6);
    for (int trial = 0; trial < 10000; ++trial) {
        Ordinal alpha;
        int pick = adist(rng);
        if (pick <= 2)
            alpha = Ordinal::from_nat(static_cast<std::uint64_t>(6));
        else if (pick <= 5)
            alpha = Ordinal::omega_pow(Ordinal::from_nat(1), static_cast<std::uint64_t>(pick)) +
                    Ordinal::from_nat(3);
        else
            alpha = w2;
        ZElement s = random_z_element(rng, alpha);
        ZElement t = random_z_element(rng, alpha);
        ZElement u = random_z_element(rng, alpha);

        Cmp st = linord::z_compare(alpha, s, t);
        Cmp ts = linord::z_compare(alpha, t, s);
        if ((st == Cmp::eq) != (s == t)) ++violations;
        if (st == Cmp::lt && ts != Cmp::gt) ++violations;
        if (st == Cmp::gt && ts != Cmp::lt) ++violations;
        if (st == Cmp::eq && ts != Cmp::eq) ++violations;

        Cmp tu = linord::z_compare(alpha, t, u);
        Cmp su = linord::z_compare(alpha, s, u);
        if (st != Cmp::gt && tu != Cmp::gt && su == Cmp::gt) ++violations;
        if (st == Cmp::lt && tu == Cmp::lt && su != Cmp::lt) ++violations;
    }
    r.lines.push_back("z_compare trichotomy/transitivity on 10000 random triples (alpha <= w^2): " +
                      std::to_string(violations) + " violations");

    // (b) condense(ZPow(n)) reaches One in exactly n steps.
    bool condense_ok = true;
    for (std::uint64_t n = 0; n <= 6; ++n) {
        auto term = linord::SymbolicOrder::zpow(Ordinal::from_nat(n));
        std::uint64_t steps = 0;
        while (!(term == linord::SymbolicOrder::one())) {
            auto next = linord::condense(term);
            if (next == term) break;
            term = next;
            ++steps;
        }
        if (steps != n || !(term == linord::SymbolicOrder::one())) condense_ok = false;
    }
    r.lines.push_back(std::string("condense(Z^n) -> One in exactly n steps for n <= 6: ") +
                      (condense_ok ? "ok" : "FAILED"));

    // (c) Z^1 code: 100 samples, two-sided discrete, no endpoints.
    bool discrete_ok = linord::sample_two_sided_discrete(*linord::z_power_code(Ordinal::from_nat(1)), 100);
    r.lines.push_back(std::string("z_power_code(1), 100 samples two-sided discrete: ") +
                      (discrete_ok ? "ok" : "FAILED"));

    r.passed = violations == 0 && condense_ok && discrete_ok;
    return r;
}

// ---------------------------------------------------------------------------
// 7. Ordinal reduction injectivity
// ---------------------------------------------------------------------------

CriterionResult run_ordinal_injectivity(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{7, "ordinal-injectivity", true, {}};

    std::vector<Ordinal> family;
    for (std::uint64_t q = 0; q <= 4; ++q)
        for (std::uint64_t rr = 0; rr <= 4; ++rr) {
            Ordinal a = (q > 0 ? Ordinal::omega_pow(Ordinal::from_nat(1), q) : Ordinal::zero()) +
                        Ordinal::from_nat(rr);
            family.push_back(a);
        }

    long long matches = 0;
    long long distinctions = 0;
    long long failures = 0;

    for (const auto& a : family) {
        auto code = linord::z_power_code(a);
        for (const auto& b : family) {
            bool expected = (a == b);
            bool got;
            try {
                got = linord::code_compare_with_symbolic(b, *code, 200).ok;
            } catch (const Error& e) {
                ++failures;
                r.lines.push_back("INCONCLUSIVE " + a.to_string() + " vs " + b.to_string() + ": " +
                                  e.what());
                continue;
            }
            if (got != expected) {
                ++failures;
                r.lines.push_back("FAIL " + a.to_string() + " vs " + b.to_string() + ": expected " +
                                  (expected ? "match" : "distinction"));
            } else if (expected) {
                ++matches;
            } else {
                ++distinctions;
            }
        }
    }

    r.passed = failures == 0;
    r.lines.insert(r.lines.begin(),
                   "CNF family {w*q+r : q,r <= 4}, sample size 200: " + std::to_string(matches) +
                       " diagonal matches, " + std::to_string(distinctions) +
                       " off-diagonal distinctions, " + std::to_string(failures) + " failures");
    return r;
}

// ---------------------------------------------------------------------------
// 8. Tournament orientation + the five illustrated arcs
// ---------------------------------------------------------------------------

CriterionResult run_tournament_orientation(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{8, "tournament-orientation", true, {}};
    bool ok = true;

    // x(-2..2) = 1,1,0,0,1, extended with period 5 so the window build is total.
    auto x = tour::BitWindow::from_pattern("11001", -2, 5);
    auto t = tour::build_tournament(x, 0, 1, -2, 2);
    ok = ok && tour::tournament_complete(t.digraph);

    const std::vector<std::pair<std::string, std::string>> expected_arcs = {
        {"(0,0)", "(1,2)"}, {"(1,1)", "(0,0)"}, {"(1,0)", "(0,0)"},
        {"(0,0)", "(1,-1)"}, {"(0,0)", "(1,-2)"}};
    for (const auto& [from, to] : expected_arcs)
        if (!t.digraph.has_arc(from, to)) {
            ok = false;
            r.lines.push_back("missing illustrated arc " + from + " -> " + to);
        }
    r.lines.push_back("five illustrated arcs from x(-2..2)=1,1,0,0,1: " +
                      std::string(ok ? "reproduced" : "FAILED"));

    long long windows = 1;
    for (const auto& fx : periodic_generic_family(4, 6)) {
        auto ft = tour::build_tournament(fx, -3, 3, 0, fx.period() - 1);
        ++windows;
        if (!tour::tournament_complete(ft.digraph)) {
            ok = false;
            r.lines.push_back("orientation violated for " + fx.pattern_string());
        }
    }
    r.lines.push_back(std::to_string(windows) + " built windows, each with exactly one arc per pair");

    r.passed = ok;
    return r;
}

// ---------------------------------------------------------------------------
// 9. Tournament round trip
// ---------------------------------------------------------------------------

namespace {

// Is every vertex's three-cycle set equal to the coordinate five-column set?
// This is the window-adequacy precondition for the decoder; it can fail at
// the row-extreme corners of a one-period window for some rotations of the
// source word (a finite-boundary artifact, not a property of the class).
bool window_s_adequate(const tour::GridTournament& t) {
    for (int m = t.m_lo; m <= t.m_hi; ++m)
        for (int n = t.n_lo; n <= t.n_hi; ++n) {
            std::set<std::string> truth;
            for (int mm = std::max(t.m_lo, m - 2); mm <= std::min(t.m_hi, m + 2); ++mm)
                for (int nn = t.n_lo; nn <= t.n_hi; ++nn) truth.insert(tour::grid_label(mm, nn));
            if (tour::three_cycle_set(t.digraph, tour::grid_label(m, n)) != truth) return false;
        }
    return true;
}

}  // namespace

CriterionResult run_tournament_roundtrip(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{9, "tournament-roundtrip", true, {}};
    bool ok = true;

    auto family = periodic_generic_family(3, 6);
    {
        std::string names;
        for (const auto& x : family) names += " " + x.pattern_string();
        r.lines.push_back("screened periodic family (period <= 3):" +
                          (names.empty() ? " (empty)" : names));
    }
    if (family.empty()) {
        r.passed = false;
        r.lines.push_back("family is empty: nothing to round-trip");
        return r;
    }

    std::vector<tour::ShiftClass> decoded;
    for (const auto& x : family) {
        int p = x.period();

        // Decode through an S-adequate window: the member's own if possible,
        // otherwise a shift-equivalent rotation's (same class, so the
        // decoded class must still match x).
        tour::BitWindow source = x;
        tour::GridTournament t = tour::build_tournament(source, -3, 3, 0, p - 1);
        int rotation = 0;
        while (!window_s_adequate(t) && rotation + 1 < p) {
            ++rotation;
            source = x.shifted(rotation);
            t = tour::build_tournament(source, -3, 3, 0, p - 1);
        }
        if (!window_s_adequate(t)) {
            ok = false;
            r.lines.push_back("FAIL no S-adequate rotation for " + x.pattern_string());
            decoded.push_back(tour::ShiftClass{x});
            continue;
        }

        bool all_rows = true;
        tour::DecodeOptions opts;
        opts.min_length = static_cast<std::size_t>(p);
        opts.assume_period = p;
        tour::ShiftClass cls;
        for (int row = 0; row < p; ++row) {
            cls = tour::decode(t, tour::grid_label(0, row), opts);
            if (!tour::shift_equivalent(cls.representative, x).equivalent) all_rows = false;
        }
        decoded.push_back(cls);
        std::string via =
            rotation == 0 ? "" : " (via the rotation " + source.pattern_string() + ")";
        if (!all_rows) {
            ok = false;
            r.lines.push_back("FAIL decode(build(" + x.pattern_string() + ")) != [" +
                              x.pattern_string() + "]" + via);
        } else {
            r.lines.push_back("decode(build(" + x.pattern_string() + ")) ~ " +
                              x.pattern_string() + " at every column-0 vertex" + via);
        }
    }

    // Decoded classes must be shift-equivalent exactly when the sources are.
    long long pair_checks = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            bool sources = tour::shift_equivalent(family[i], family[j]).equivalent;
            bool decodes = tour::shift_equivalent(decoded[i].representative,
                                                  decoded[j].representative)
                               .equivalent;
            if (sources != decodes) {
                ok = false;
                r.lines.push_back("FAIL class mismatch " + family[i].pattern_string() + " vs " +
                                  family[j].pattern_string());
            }
            ++pair_checks;
        }
    r.lines.push_back("pairwise decoded-class agreement on " + std::to_string(pair_checks) +
                      " pairs");

    long long phi_checks = 0;
    for (const auto& x : family)
        for (int k = 0; k < x.period(); ++k) {
            if (!tour::phi_isomorphism_check(x, k, -3, 3, -6, 6)) {
                ok = false;
                r.lines.push_back("FAIL phi check " + x.pattern_string() + " shift " +
                                  std::to_string(k));
            }
            ++phi_checks;
        }
    r.lines.push_back("phi isomorphism checks passed: " + std::to_string(phi_checks));

    r.passed = ok;
    return r;
}

// ---------------------------------------------------------------------------
// 10. S_v correctness and the no-left-long-jump fact
// ---------------------------------------------------------------------------

CriterionResult run_sv_columns(std::uint64_t seed) {
    (void)seed;
    CriterionResult r{10, "sv-columns", true, {}};
    bool ok = true;
    long long vertices_checked = 0;

    auto family = periodic_generic_family(3, 6);
    if (family.empty()) {
        r.passed = false;
        r.lines.push_back("screened family is empty");
        return r;
    }

    for (const auto& x : family) {
        int p = x.period();
        auto t = tour::build_tournament(x, -3, 3, 0, p - 1);

        if (!tour::left_arcs_one_column(t)) {
            ok = false;
            r.lines.push_back("FAIL left-arc fact for " + x.pattern_string());
        }

        // Interior: two columns and one row (the witness-search margin) from
        // the boundary.
        for (int m = t.m_lo + 2; m <= t.m_hi - 2; ++m)
            for (int n = t.n_lo + 1; n <= t.n_hi - 1; ++n) {
                auto sv = tour::three_cycle_set(t.digraph, tour::grid_label(m, n));
                std::set<std::string> truth;
                for (int mm = std::max(t.m_lo, m - 2); mm <= std::min(t.m_hi, m + 2); ++mm)
                    for (int nn = t.n_lo; nn <= t.n_hi; ++nn)
                        truth.insert(tour::grid_label(mm, nn));
                if (sv != truth) {
                    ok = false;
                    r.lines.push_back("FAIL S_v at " + tour::grid_label(m, n) + " for " +
                                      x.pattern_string());
                }
                ++vertices_checked;
            }

        r.lines.push_back(x.pattern_string() + ": S_v exact " +
                          (window_s_adequate(t)
                               ? "at every window vertex"
                               : "on the row-margin interior (row-extreme corners are "
                                 "window artifacts for this rotation)"));
    }

    r.passed = ok;
    r.lines.insert(r.lines.begin(),
                   "S_v equals the coordinate five-column set at " +
                       std::to_string(vertices_checked) +
                       " interior vertices (margins: 2 columns, 1 row); left arcs span one "
                       "column in every window");
    return r;
}

// ---------------------------------------------------------------------------
// Determinism + assembly
// ---------------------------------------------------------------------------

namespace {

CriterionResult guarded(CriterionResult (*fn)(std::uint64_t), std::uint64_t seed, int id,
                        const char* name) {
    try {
        return fn(seed);
    } catch (const std::exception& e) {
        CriterionResult r{id, name, false, {}};
        r.lines.push_back(std::string("unexpected error: ") + e.what());
        return r;
    }
}

std::vector<CriterionResult> run_core_criteria(std::uint64_t seed) {
    return {guarded(run_raag_oracle, seed, 1, "raag-oracle"),
            guarded(run_abelian_free, seed, 2, "abelian-free"),
            guarded(run_grading_acyclicity, seed, 3, "grading-acyclicity"),
            guarded(run_ball_functoriality, seed, 4, "ball-functoriality"),
            guarded(run_poset_roundtrip, seed, 5, "roundtrip-poset"),
            guarded(run_zalpha_calculus, seed, 6, "zalpha-calculus"),
            guarded(run_ordinal_injectivity, seed, 7, "ordinal-injectivity"),
            guarded(run_tournament_orientation, seed, 8, "tournament-orientation"),
            guarded(run_tournament_roundtrip, seed, 9, "tournament-roundtrip"),
            guarded(run_sv_columns, seed, 10, "sv-columns")};
}

std::string render_results(std::uint64_t seed, const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    os << "vtcomb verification report (seed " << seed << ")\n";
    for (const auto& c : results) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "\n";
        for (const auto& line : c.lines) os << "      " << line << "\n";
    }
    return os.str();
}

}  // namespace

CriterionResult run_determinism(std::uint64_t seed) {
    CriterionResult r{11, "determinism", true, {}};
    std::string first = render_results(seed, run_core_criteria(seed));
    std::string second = render_results(seed, run_core_criteria(seed));
    r.passed = first == second;
    r.lines.push_back("two full runs with seed " + std::to_string(seed) + ": " +
                      (r.passed ? "byte-identical reports (" + std::to_string(first.size()) +
                                      " bytes)"
                                : "REPORTS DIFFER"));
    return r;
}

bool SuiteReport::all_passed() const {
    for (const auto& c : results)
        if (!c.passed) return false;
    return true;
}

std::string SuiteReport::render() const { return render_results(seed, results); }

SuiteReport run_all(std::uint64_t seed) {
    SuiteReport rep;
    rep.seed = seed;
    rep.results = run_core_criteria(seed);

    // Second pass for the determinism criterion.
    CriterionResult det{11, "determinism", true, {}};
    std::string first = render_results(seed, rep.results);
    std::string second = render_results(seed, run_core_criteria(seed));
    det.passed = first == second;
    det.lines.push_back("second full pass with the same seed is " +
                        std::string(det.passed ? "byte-identical" : "DIFFERENT"));
    rep.results.push_back(det);
    return rep;
}

std::vector<std::string> suite_names() {
    return {"raag-oracle",          "abelian-free",        "grading-acyclicity",
            "ball-functoriality",   "roundtrip-poset",     "zalpha-calculus",
            "ordinal-injectivity",  "tournament-orientation", "tournament-roundtrip",
            "sv-columns",           "determinism",         "all"};
}

CriterionResult run_by_name(const std::string& name, std::uint64_t seed) {
    if (name == "raag-oracle") return run_raag_oracle(seed);
    if (name == "abelian-free") return run_abelian_free(seed);
    if (name == "grading-acyclicity") return run_grading_acyclicity(seed);
    if (name == "ball-functoriality") return run_ball_functoriality(seed);
    if (name == "roundtrip-poset") return run_poset_roundtrip(seed);
    if (name == "zalpha-calculus") return run_zalpha_calculus(seed);
    if (name == "ordinal-injectivity") return run_ordinal_injectivity(seed);
    if (name == "tournament-orientation") return run_tournament_orientation(seed);
    if (name == "tournament-roundtrip") return run_tournament_roundtrip(seed);
    if (name == "sv-columns") return run_sv_columns(seed);
    if (name == "determinism") return run_determinism(seed);
    throw invalid_input("unknown suite: " + name);
}

std::vector<tour::BitWindow> periodic_generic_family(int max_period, long long bound) {
    std::vector<tour::BitWindow> out;
    for (int p = 1; p <= max_period; ++p) {
        for (std::uint64_t mask = 0; mask < (1ull << p); ++mask) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;

            bool has0 = false;
            bool has1 = false;
            for (auto b : bits) (b ? has1 : has0) = true;
            if (!has0 || !has1) continue;

            bool primitive = true;
            for (int d = 1; d < p; ++d) {
                if (p % d != 0) continue;
                bool repeats = true;
                for (int i = 0; i < p && repeats; ++i)
                    if (bits[static_cast<std::size_t>(i)] != bits[static_cast<std::size_t>(i % d)])
                        repeats = false;
                if (repeats) primitive = false;
            }
            if (!primitive) continue;

            tour::BitWindow x(0, bits, p);
            auto rep = tour::check_genericity(x, bound);
            bool ok = rep.overall_ii;
            for (long long n = -bound; n <= bound && ok; ++n) {
                if (n == 0 || n % p == 0) continue;
                if (!rep.at(n).cond_i.value_or(false)) ok = false;
            }
            if (ok) out.push_back(x);
        }
    }
    return out;
}

}  // namespace vt::suites
