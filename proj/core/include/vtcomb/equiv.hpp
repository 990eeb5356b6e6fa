#ifndef VTCOMB_EQUIV_HPP
#define VTCOMB_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vtcomb/bitwindow.hpp"

namespace vt::equiv {

// Finite prefix of an element of 2^omega with an optional tail descriptor
// that makes the remaining coordinates resolvable.
class OneSidedWord {
public:
    struct Tail {
        enum class Kind { Constant, Periodic };
        Kind kind = Kind::Constant;
        std::uint8_t value = 0;               // Constant
        std::vector<std::uint8_t> pattern;    // Periodic
    };

    OneSidedWord() = default;
    OneSidedWord(std::vector<std::uint8_t> prefix, std::optional<Tail> tail);

    static OneSidedWord constant(std::uint8_t value);
    static OneSidedWord eventually_periodic(const std::string& prefix, const std::string& pattern);
    static OneSidedWord windowed(const std::string& prefix);

    const std::vector<std::uint8_t>& prefix() const { return prefix_; }
    const std::optional<Tail>& tail() const { return tail_; }

    bool has_tail() const { return tail_.has_value(); }
    bool resolvable(std::size_t n) const { return has_tail() || n < prefix_.size(); }
    int bit(std::size_t n) const;

    // Period of the tail (1 for a constant tail); only with a tail.
    std::size_t tail_period() const;

private:
    std::vector<std::uint8_t> prefix_;
    std::optional<Tail> tail_;
};

struct E0Decision {
    bool equivalent = false;
    bool window_limited = false;

    explicit operator bool() const { return equivalent; }
};

// E_0: equality at all but finitely many coordinates. Exact decision for two
// words with tail descriptors: disagreements beyond both prefixes recur
// periodically, so one lcm period decides. A missing tail is an error here;
// use e0_window_limited for plain prefixes.
E0Decision e0_equivalent(const OneSidedWord& a, const OneSidedWord& b);

// Bounded verdict over [ignore_prefix, common resolvable end), flagged
// window-limited.
E0Decision e0_window_limited(const OneSidedWord& a, const OneSidedWord& b,
                             std::size_t ignore_prefix = 0);

// E_Z on two-sided words: re-export of the tournament-side shift decision.
inline tour::ShiftDecision e_z_equivalent(const tour::BitWindow& a, const tour::BitWindow& b) {
    return tour::shift_equivalent(a, b);
}

}  // namespace vt::equiv

#endif
