#include "vtcomb/equiv.hpp"

#include <numeric>

#include "vtcomb/errors.hpp"

namespace vt::equiv {

namespace {

std::vector<std::uint8_t> parse_bits(const std::string& s) {
    std::vector<std::uint8_t> v;
    v.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw invalid_input("bit string must be over {0,1}");
        v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return v;
}

}  // namespace

OneSidedWord::OneSidedWord(std::vector<std::uint8_t> prefix, std::optional<Tail> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    for (auto b : prefix_)
        if (b > 1) throw invalid_input("bits must be 0 or 1");
    if (tail_ && tail_->kind == Tail::Kind::Periodic) {
        if (tail_->pattern.empty()) throw invalid_input("periodic tail needs a nonempty pattern");
        for (auto b : tail_->pattern)
            if (b > 1) throw invalid_input("bits must be 0 or 1");
    }
    if (tail_ && tail_->kind == Tail::Kind::Constant && tail_->value > 1)
        throw invalid_input("bits must be 0 or 1");
}

OneSidedWord OneSidedWord::constant(std::uint8_t value) {
    return OneSidedWord({}, Tail{Tail::Kind::Constant, value, {}});
}

OneSidedWord OneSidedWord::eventually_periodic(const std::string& prefix,
                                               const std::string& pattern) {
    return OneSidedWord(parse_bits(prefix),
                        Tail{Tail::Kind::Periodic, 0, parse_bits(pattern)});
}

OneSidedWord OneSidedWord::windowed(const std::string& prefix) {
    return OneSidedWord(parse_bits(prefix), std::nullopt);
}

int OneSidedWord::bit(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    if (!tail_)
        throw invalid_input("coordinate " + std::to_string(n) +
                            " is beyond the prefix and no tail descriptor is present");
    if (tail_->kind == Tail::Kind::Constant) return tail_->value;
    return tail_->pattern[(n - prefix_.size()) % tail_->pattern.size()];
}

std::size_t OneSidedWord::tail_period() const {
    if (!tail_) throw invalid_input("word has no tail descriptor");
    return tail_->kind == Tail::Kind::Constant ? 1 : tail_->pattern.size();
}

E0Decision e0_equivalent(const OneSidedWord& a, const OneSidedWord& b) {
    if (!a.has_tail() || !b.has_tail())
        throw invalid_input("unresolvable tail in exact mode; use the window-limited comparison");
    std::size_t start = std::max(a.prefix().size(), b.prefix().size());
    std::size_t span = std::lcm(a.tail_period(), b.tail_period());
    // Beyond both prefixes the disagreement set is span-periodic, so it is
    // finite iff it is empty there.
    for (std::size_t n = start; n < start + span; ++n)
        if (a.bit(n) != b.bit(n)) return {false, false};
    return {true, false};
}

E0Decision e0_window_limited(const OneSidedWord& a, const OneSidedWord& b,
                             std::size_t ignore_prefix) {
    std::size_t end = std::min(a.has_tail() ? SIZE_MAX : a.prefix().size(),
                               b.has_tail() ? SIZE_MAX : b.prefix().size());
    if (end == SIZE_MAX) return {e0_equivalent(a, b).equivalent, true};
    for (std::size_t n = ignore_prefix; n < end; ++n)
        if (a.bit(n) != b.bit(n)) return {false, true};
    return {true, true};
}

}  // namespace vt::equiv
