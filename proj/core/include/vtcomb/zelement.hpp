#ifndef VTCOMB_ZELEMENT_HPP
#define VTCOMB_ZELEMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "vtcomb/ordinal.hpp"

namespace vt::linord {

// Finitely supported map from ordinal positions to nonzero integers; an
// element of Z^alpha once every position is below alpha. Support is kept
// sorted by position ascending.
class ZElement {
public:
    ZElement() = default;
    explicit ZElement(std::vector<std::pair<Ordinal, long long>> support);

    static ZElement zero() { return ZElement(); }
    static ZElement unit(const Ordinal& position, long long value);

    const std::vector<std::pair<Ordinal, long long>>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    long long value_at(const Ordinal& position) const;
    ZElement with_value(const Ordinal& position, long long value) const;
    ZElement negated() const;

    // All support positions strictly below alpha?
    bool support_below(const Ordinal& alpha) const;

    std::string to_string() const;
    bool operator==(const ZElement& o) const;

private:
    std::vector<std::pair<Ordinal, long long>> support_;
};

// Reverse-lexicographic comparison in Z^alpha: find the greatest position
// where s and t differ and compare the values there. Throws when a support
// position is not below alpha.
Cmp z_compare(const Ordinal& alpha, const ZElement& s, const ZElement& t);

// Same comparison without the domain check.
Cmp z_compare_unchecked(const ZElement& s, const ZElement& t);

// True iff t is the immediate successor of s in any Z^alpha containing both:
// they differ exactly at position 0, by +1.
bool immediate_successor_in_z(const ZElement& s, const ZElement& t);

}  // namespace vt::linord

#endif
