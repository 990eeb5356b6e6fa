#include "vtcomb/tournament.hpp"

#include <algorithm>

#include "vtcomb/errors.hpp"

namespace vt::tour {

std::string grid_label(int m, int n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::pair<int, int> parse_grid_label(const std::string& label) {
    if (label.size() < 5 || label.front() != '(' || label.back() != ')')
        throw invalid_input("bad grid label: " + label);
    auto comma = label.find(',');
    if (comma == std::string::npos) throw invalid_input("bad grid label: " + label);
    return {std::stoi(label.substr(1, comma - 1)),
            std::stoi(label.substr(comma + 1, label.size() - comma - 2))};
}

namespace {

// The three arc rules for (m,n) -> (m2,n2).
bool arrow(const BitWindow& x, int m, int n, int m2, int n2) {
    if (m == m2) return n > n2;
    if (m2 == m + 1) return x.bit(static_cast<long long>(n2) - n) == 1;
    return m2 >= m + 2;
}

}  // namespace

GridTournament build_tournament(const BitWindow& x, int m_lo, int m_hi, int n_lo, int n_hi) {
    if (m_lo > m_hi || n_lo > n_hi) throw invalid_input("empty tournament window");
    long long cells = (static_cast<long long>(m_hi) - m_lo + 1) *
                      (static_cast<long long>(n_hi) - n_lo + 1);
    if (cells > 50000) throw size_cap("tournament window has " + std::to_string(cells) + " cells");

    if (m_hi > m_lo) {
        for (long long delta = static_cast<long long>(n_lo) - n_hi;
             delta <= static_cast<long long>(n_hi) - n_lo; ++delta)
            if (!x.resolvable(delta))
                throw missing_offset("tournament build needs x(" + std::to_string(delta) +
                                     "), which the window does not resolve");
    }

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> coords;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = n_lo; n <= n_hi; ++n) {
            labels.push_back(grid_label(m, n));
            coords.emplace_back(m, n);
        }

    GridTournament t;
    t.m_lo = m_lo;
    t.m_hi = m_hi;
    t.n_lo = n_lo;
    t.n_hi = n_hi;
    t.source = x;
    t.digraph = LabeledDigraph(labels, /*oriented=*/true);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            auto [m1, n1] = coords[i];
            auto [m2, n2] = coords[j];
            if (arrow(x, m1, n1, m2, n2))
                t.digraph.add_arc(labels[i], labels[j]);
            else
                t.digraph.add_arc(labels[j], labels[i]);
        }
    return t;
}

bool tournament_complete(const LabeledDigraph& d) {
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v = u + 1; v < d.vertex_count(); ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

bool left_arcs_one_column(const GridTournament& t) {
    for (const auto& [u, v] : t.digraph.arcs()) {
        auto [mu, nu] = parse_grid_label(t.digraph.label_of(u));
        auto [mv, nv] = parse_grid_label(t.digraph.label_of(v));
        (void)nu;
        (void)nv;
        if (mu > mv && mu != mv + 1) return false;
    }
    return true;
}

const GenericityEntry& GenericityReport::at(long long n) const {
    for (const auto& e : entries)
        if (e.n == n) return e;
    throw invalid_input("no genericity entry for n = " + std::to_string(n));
}

GenericityReport check_genericity(const BitWindow& x, long long n_bound) {
    if (n_bound < 1) throw invalid_input("genericity bound must be positive");
    GenericityReport rep;
    rep.n_bound = n_bound;
    const bool periodic = x.periodic();
    const long long p = periodic ? x.period() : 0;

    for (long long n = -n_bound; n <= n_bound; ++n) {
        GenericityEntry e;
        e.n = n;

        if (n != 0) {
            bool found = false;
            long long klo;
            long long khi;
            if (periodic) {
                klo = n - p;  // k < n, one full period of residues
                khi = n - 1;
            } else {
                klo = std::max<long long>(x.lo(), x.lo() + n);
                khi = std::min<long long>({static_cast<long long>(x.hi()), x.hi() + n, n - 1});
                e.cond_i_truncated = true;
            }
            for (long long k = klo; k <= khi && !found; ++k)
                if (x.bit(k - n) == 1 && x.bit(k) == 0) {
                    found = true;
                    e.witness_i = k;
                }
            e.cond_i = found;
            if (!found) rep.overall_i = false;
        }

        {
            bool found = false;
            long long klo;
            long long khi;
            if (periodic) {
                klo = 0;
                khi = p - 1;
            } else {
                klo = std::max<long long>(-static_cast<long long>(x.hi()), x.lo() + n);
                khi = std::min<long long>(-static_cast<long long>(x.lo()), x.hi() + n);
                e.cond_ii_truncated = true;
            }
            for (long long k = klo; k <= khi && !found; ++k)
                if (x.bit(-k) == 0 && x.bit(k - n) == 0) {
                    found = true;
                    e.witness_ii = k;
                }
            e.cond_ii = found;
            if (!found) rep.overall_ii = false;
        }

        rep.entries.push_back(e);
    }
    return rep;
}

std::set<std::string> three_cycle_set(const LabeledDigraph& d, const std::string& v) {
    int vi = d.index_of(v);
    std::set<std::string> out;
    bool v_on_cycle = false;
    for (int w = 0; w < d.vertex_count(); ++w) {
        if (w == vi) continue;
        bool involved = false;
        for (int u = 0; u < d.vertex_count() && !involved; ++u) {
            if (u == vi || u == w) continue;
            if (d.has_arc(vi, w) && d.has_arc(w, u) && d.has_arc(u, vi)) involved = true;
            if (d.has_arc(w, vi) && d.has_arc(vi, u) && d.has_arc(u, w)) involved = true;
        }
        if (involved) {
            out.insert(d.label_of(w));
            v_on_cycle = true;
        }
    }
    if (v_on_cycle) out.insert(v);
    return out;
}

namespace {

// Memoized evaluation of the five rules over the bare arc relation. Rules
// run in the order C0, C-2, C+2, C-1, C+1; each draws its candidates from
// the members of S_v not claimed by an earlier rule.
class ColumnAnalyzer {
public:
    explicit ColumnAnalyzer(const LabeledDigraph& d) : d_(d) {}

    const std::set<std::string>& s(const std::string& v) {
        auto it = s_.find(v);
        if (it != s_.end()) return it->second;
        return s_.emplace(v, three_cycle_set(d_, v)).first->second;
    }

    const std::set<std::string>& c0(const std::string& v) {
        auto it = c0_.find(v);
        if (it != c0_.end()) return it->second;
        std::set<std::string> out;
        for (const auto& w : s(v))
            if (s(w) == s(v)) out.insert(w);
        return c0_.emplace(v, std::move(out)).first->second;
    }

    const std::set<std::string>& cm2(const std::string& v) {
        auto it = cm2_.find(v);
        if (it != cm2_.end()) return it->second;
        std::set<std::string> out;
        for (const auto& w : s(v)) {
            if (c0(v).count(w)) continue;
            bool any_arc = false;
            for (const auto& u : c0(w))
                if (d_.has_arc(v, u)) {
                    any_arc = true;
                    break;
                }
            if (!any_arc) out.insert(w);
        }
        return cm2_.emplace(v, std::move(out)).first->second;
    }

    const std::set<std::string>& c2(const std::string& v) {
        auto it = c2_.find(v);
        if (it != c2_.end()) return it->second;
        std::set<std::string> out;
        for (const auto& w : s(v)) {
            if (c0(v).count(w) || cm2(v).count(w)) continue;
            if (cm2(w).count(v)) out.insert(w);
        }
        return c2_.emplace(v, std::move(out)).first->second;
    }

    const std::set<std::string>& cm1(const std::string& v) {
        auto it = cm1_.find(v);
        if (it != cm1_.end()) return it->second;
        std::set<std::string> out;
        for (const auto& w : s(v)) {
            if (c0(v).count(w) || cm2(v).count(w) || c2(v).count(w)) continue;
            bool excluded = false;
            for (const auto& u : c2(v))
                if (s(w).count(u)) {
                    excluded = true;
                    break;
                }
            if (!excluded) out.insert(w);
        }
        return cm1_.emplace(v, std::move(out)).first->second;
    }

    const std::set<std::string>& c1(const std::string& v) {
        auto it = c1_.find(v);
        if (it != c1_.end()) return it->second;
        std::set<std::string> out;
        for (const auto& w : s(v)) {
            if (c0(v).count(w) || cm2(v).count(w) || c2(v).count(w) || cm1(v).count(w)) continue;
            if (cm1(w).count(v)) out.insert(w);
        }
        return c1_.emplace(v, std::move(out)).first->second;
    }

private:
    const LabeledDigraph& d_;
    std::map<std::string, std::set<std::string>> s_, c0_, cm2_, c2_, cm1_, c1_;
};

}  // namespace

ColumnSets identify_columns_core(const LabeledDigraph& d, const std::string& v) {
    ColumnAnalyzer a(d);
    ColumnSets out;
    out.s_v = a.s(v);
    out.c[0] = a.cm2(v);
    out.c[1] = a.cm1(v);
    out.c[2] = a.c0(v);
    out.c[3] = a.c1(v);
    out.c[4] = a.c2(v);
    return out;
}

ColumnSets identify_columns(const GridTournament& t, const std::string& v, int col_margin,
                            int row_margin) {
    auto [m, n] = parse_grid_label(v);
    if (!t.contains(m, n)) throw invalid_input("vertex " + v + " is not in the window");
    if (m - t.m_lo < col_margin || t.m_hi - m < col_margin || n - t.n_lo < row_margin ||
        t.n_hi - n < row_margin)
        throw margin_error("vertex " + v + " is within the margin (need " +
                           std::to_string(col_margin) + " columns, " + std::to_string(row_margin) +
                           " rows from the boundary)");
    return identify_columns_core(t.digraph, v);
}

ShiftClass decode_core(const LabeledDigraph& d, const std::string& v, const DecodeOptions& opts) {
    ColumnSets cols = identify_columns_core(d, v);
    const auto& c1 = cols.at_offset(1);
    if (c1.size() < std::max<std::size_t>(opts.min_length, 1))
        throw coverage_error("C_{1,v} has " + std::to_string(c1.size()) +
                             " vertices, need at least " +
                             std::to_string(std::max<std::size_t>(opts.min_length, 1)));

    // The -> relation restricted to C_{1,v} must be a strict linear order;
    // ascending means "pointed at", since inside a column arcs run downward.
    std::vector<std::string> order(c1.begin(), c1.end());
    for (const auto& a : order)
        for (const auto& b : order)
            if (a != b && d.has_arc(a, b) == d.has_arc(b, a))
                throw invalid_input("the arc relation on C_{1,v} is not a tournament");
    std::sort(order.begin(), order.end(),
              [&](const std::string& a, const std::string& b) { return d.has_arc(b, a); });
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!d.has_arc(order[j], order[i]))
                throw invalid_input("the arc relation on C_{1,v} is not a linear order");

    std::vector<std::uint8_t> bits;
    bits.reserve(order.size());
    for (const auto& w : order) bits.push_back(d.has_arc(v, w) ? 1 : 0);

    int anchor = static_cast<int>(order.size()) / 2;
    BitWindow window(-anchor, std::move(bits));
    if (opts.assume_period) window = window.as_periodic(*opts.assume_period);
    return ShiftClass{window};
}

ShiftClass decode(const GridTournament& t, const std::string& v, const DecodeOptions& opts,
                  int col_margin, int row_margin) {
    auto [m, n] = parse_grid_label(v);
    if (!t.contains(m, n)) throw invalid_input("vertex " + v + " is not in the window");
    if (m - t.m_lo < col_margin || t.m_hi - m < col_margin || n - t.n_lo < row_margin ||
        t.n_hi - n < row_margin)
        throw margin_error("decode at " + v + " violates the margin");
    return decode_core(t.digraph, v, opts);
}

bool translation_check(const GridTournament& t, int dm, int dn) {
    std::vector<std::pair<int, int>> overlap;
    for (int m = t.m_lo; m <= t.m_hi; ++m)
        for (int n = t.n_lo; n <= t.n_hi; ++n)
            if (t.contains(m + dm, n + dn)) overlap.emplace_back(m, n);
    if (overlap.size() < 2)
        throw invalid_input("translation overlap has fewer than two vertices");
    for (std::size_t i = 0; i < overlap.size(); ++i)
        for (std::size_t j = 0; j < overlap.size(); ++j) {
            if (i == j) continue;
            auto [m1, n1] = overlap[i];
            auto [m2, n2] = overlap[j];
            bool before = t.digraph.has_arc(grid_label(m1, n1), grid_label(m2, n2));
            bool after =
                t.digraph.has_arc(grid_label(m1 + dm, n1 + dn), grid_label(m2 + dm, n2 + dn));
            if (before != after) return false;
        }
    return true;
}

bool phi_isomorphism_check(const BitWindow& x, int k, int m_lo, int m_hi, int n_lo, int n_hi) {
    if (!x.periodic()) throw invalid_input("phi check requires a periodic source word");
    BitWindow shifted = x.shifted(k);
    GridTournament tx = build_tournament(x, m_lo, m_hi, n_lo, n_hi);
    GridTournament ty = build_tournament(shifted, m_lo, m_hi, n_lo, n_hi);

    std::vector<std::pair<int, int>> domain;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = n_lo; n <= n_hi; ++n) {
            long long image_row = static_cast<long long>(n) + static_cast<long long>(k) * m;
            if (image_row >= n_lo && image_row <= n_hi) domain.emplace_back(m, n);
        }
    if (domain.size() < 2) throw invalid_input("phi domain overlap has fewer than two vertices");

    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j) {
            if (i == j) continue;
            auto [m1, n1] = domain[i];
            auto [m2, n2] = domain[j];
            bool before = tx.digraph.has_arc(grid_label(m1, n1), grid_label(m2, n2));
            bool after = ty.digraph.has_arc(grid_label(m1, n1 + k * m1), grid_label(m2, n2 + k * m2));
            if (before != after) return false;
        }
    return true;
}

}  // namespace vt::tour
