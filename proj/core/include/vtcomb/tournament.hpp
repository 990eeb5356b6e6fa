#ifndef VTCOMB_TOURNAMENT_HPP
#define VTCOMB_TOURNAMENT_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vtcomb/bitwindow.hpp"
#include "vtcomb/digraph.hpp"

namespace vt::tour {

// Finite window of the tournament T_x on Z x Z. Vertices are labeled
// "(m,n)" (column m, row n); the label format is for ground-truth tests and
// export only. The arc between (m,n) and (m',n') with m <= m' points
//   (m,n) -> (m',n')  iff  m=m' and n>n', or m'=m+1 and x(n'-n)=1, or m'>=m+2,
// and the other way otherwise.
struct GridTournament {
    int m_lo = 0, m_hi = 0, n_lo = 0, n_hi = 0;
    LabeledDigraph digraph;
    BitWindow source;

    bool contains(int m, int n) const { return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi; }
};

std::string grid_label(int m, int n);
std::pair<int, int> parse_grid_label(const std::string& label);

// Throws vt::missing_offset (naming the missing index) when some row offset
// n'-n cannot be resolved from x.
GridTournament build_tournament(const BitWindow& x, int m_lo, int m_hi, int n_lo, int n_hi);

// Exactly one arc per unordered vertex pair?
bool tournament_complete(const LabeledDigraph& d);

// Every left-pointing arc spans exactly one column.
bool left_arcs_one_column(const GridTournament& t);

struct GenericityEntry {
    long long n = 0;
    // Condition (i): some k < n with z(k-n) = 1 and z(k) = 0 (n != 0 only).
    std::optional<bool> cond_i;
    bool cond_i_truncated = false;
    std::optional<long long> witness_i;
    // Condition (ii): some k with z(-k) = 0 and z(k-n) = 0.
    bool cond_ii = false;
    bool cond_ii_truncated = false;
    std::optional<long long> witness_ii;
};

struct GenericityReport {
    long long n_bound = 0;
    std::vector<GenericityEntry> entries;  // n = -bound..bound
    bool overall_i = true;
    bool overall_ii = true;
    bool overall() const { return overall_i && overall_ii; }

    const GenericityEntry& at(long long n) const;
};

// Checks the two genericity conditions for every |n| <= n_bound. For a
// periodic x the witness search is complete within one period of offsets;
// for a plain window it is truncated to resolvable offsets and flagged.
GenericityReport check_genericity(const BitWindow& x, long long n_bound);

// Vertices involved in a directed three-cycle with v (v itself included
// exactly when it lies on some three-cycle). Works on the bare arc relation.
std::set<std::string> three_cycle_set(const LabeledDigraph& d, const std::string& v);

struct ColumnSets {
    std::set<std::string> s_v;
    // c[0] = C_{-2,v} .. c[4] = C_{+2,v}
    std::array<std::set<std::string>, 5> c;

    const std::set<std::string>& at_offset(int i) const { return c.at(static_cast<std::size_t>(i + 2)); }
};

// The five column-identification rules, evaluated on the bare arc relation.
// Rules are applied in the order C0, C-2, C+2, C-1, C+1 with each rule's
// candidates restricted to the still-unclassified members of S_v; on the full
// grid the five sets are disjoint, so the restriction only cancels
// window-boundary artifacts.
ColumnSets identify_columns_core(const LabeledDigraph& d, const std::string& v);

// Margin-checked wrapper: v must be at least col_margin columns and
// row_margin rows away from the window boundary.
ColumnSets identify_columns(const GridTournament& t, const std::string& v, int col_margin = 2,
                            int row_margin = 0);

struct DecodeOptions {
    std::size_t min_length = 2;
    std::optional<int> assume_period;
};

// Reads the source word, up to shift, from the arcs between v and the column
// C_{1,v}: the -> relation linearly orders that column, bits are 1 exactly
// where v points at the element, and the window is anchored at the middle
// element (absolute positions are meaningless, only the shift class is).
ShiftClass decode_core(const LabeledDigraph& d, const std::string& v,
                       const DecodeOptions& opts = {});

ShiftClass decode(const GridTournament& t, const std::string& v, const DecodeOptions& opts = {},
                  int col_margin = 2, int row_margin = 0);

// Does (m,n) -> (m+dm, n+dn) carry arcs to arcs on the window overlap?
bool translation_check(const GridTournament& t, int dm, int dn);

// Builds T_x and T_{x'} for x' the k-shift of x (periodic only) and checks
// that phi(m,n) = (m, n+k*m) carries arcs to arcs on the domain overlap.
bool phi_isomorphism_check(const BitWindow& x, int k, int m_lo, int m_hi, int n_lo, int n_hi);

}  // namespace vt::tour

#endif
