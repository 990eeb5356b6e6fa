#include "vtcomb/zelement.hpp"

#include <algorithm>
#include <sstream>

#include "vtcomb/errors.hpp"

namespace vt::linord {

ZElement::ZElement(std::vector<std::pair<Ordinal, long long>> support)
    : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i].second == 0) throw invalid_input("ZElement support value must be nonzero");
        if (i > 0 && support_[i - 1].first == support_[i].first)
            throw invalid_input("ZElement support positions must be distinct");
    }
}

ZElement ZElement::unit(const Ordinal& position, long long value) {
    if (value == 0) return ZElement();
    return ZElement({{position, value}});
}

long long ZElement::value_at(const Ordinal& position) const {
    for (const auto& [p, v] : support_)
        if (p == position) return v;
    return 0;
}

ZElement ZElement::with_value(const Ordinal& position, long long value) const {
    std::vector<std::pair<Ordinal, long long>> s;
    for (const auto& e : support_)
        if (!(e.first == position)) s.push_back(e);
    if (value != 0) s.emplace_back(position, value);
    return ZElement(std::move(s));
}

ZElement ZElement::negated() const {
    auto s = support_;
    for (auto& [p, v] : s) v = -v;
    return ZElement(std::move(s));
}

bool ZElement::support_below(const Ordinal& alpha) const {
    for (const auto& [p, v] : support_)
        if (!(p < alpha)) return false;
    return true;
}

std::string ZElement::to_string() const {
    if (support_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) os << ", ";
        os << support_[i].first.to_string() << " -> " << support_[i].second;
    }
    os << "}";
    return os.str();
}

bool ZElement::operator==(const ZElement& o) const {
    if (support_.size() != o.support_.size()) return false;
    for (std::size_t i = 0; i < support_.size(); ++i)
        if (!(support_[i].first == o.support_[i].first) ||
            support_[i].second != o.support_[i].second)
            return false;
    return true;
}

Cmp z_compare_unchecked(const ZElement& s, const ZElement& t) {
    const auto& a = s.support();
    const auto& b = t.support();
    // Walk both supports from the greatest position downward.
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    while (ia != a.rend() || ib != b.rend()) {
        long long va = 0;
        long long vb = 0;
        if (ia == a.rend()) {
            vb = ib->second;
            ++ib;
        } else if (ib == b.rend()) {
            va = ia->second;
            ++ia;
        } else {
            Cmp c = ord_compare(ia->first, ib->first);
            if (c == Cmp::gt) {
                va = ia->second;
                ++ia;
            } else if (c == Cmp::lt) {
                vb = ib->second;
                ++ib;
            } else {
                va = ia->second;
                vb = ib->second;
                ++ia;
                ++ib;
            }
        }
        if (va != vb) return va < vb ? Cmp::lt : Cmp::gt;
    }
    return Cmp::eq;
}

Cmp z_compare(const Ordinal& alpha, const ZElement& s, const ZElement& t) {
    for (const auto* e : {&s, &t})
        if (!e->support_below(alpha))
            throw invalid_input("ZElement has a support position >= alpha = " + alpha.to_string());
    return z_compare_unchecked(s, t);
}

bool immediate_successor_in_z(const ZElement& s, const ZElement& t) {
    ZElement bumped = s.with_value(Ordinal::zero(), s.value_at(Ordinal::zero()) + 1);
    return bumped == t;
}

}  // namespace vt::linord
