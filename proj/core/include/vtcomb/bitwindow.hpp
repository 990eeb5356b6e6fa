#ifndef VTCOMB_BITWINDOW_HPP
#define VTCOMB_BITWINDOW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vt::tour {

// Finite approximation of an element of 2^Z: a total bit assignment on the
// interval [lo, hi] (with lo <= 0 <= hi), optionally extended to all of Z by
// a period p. When periodic, the stored window must span at least one period
// and be consistent with it.
class BitWindow {
public:
    BitWindow() = default;
    BitWindow(int lo, std::vector<std::uint8_t> bits, std::optional<int> period = std::nullopt);

    // Bits given as a string of '0'/'1', leftmost at index `lo`.
    static BitWindow from_pattern(const std::string& bits, int lo = 0,
                                  std::optional<int> period = std::nullopt);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool periodic() const { return period_.has_value(); }
    int period() const;
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool resolvable(long long n) const;
    int bit(long long n) const;  // throws vt::missing_offset when unresolvable

    // y with y(n) = x(n - k): the k-shift (periodic windows only).
    BitWindow shifted(int k) const;

    BitWindow as_windowed() const;           // drop the periodic extension
    BitWindow as_periodic(int period) const; // attach a period (consistency-checked)

    std::string pattern_string() const;
    bool operator==(const BitWindow& o) const = default;

private:
    int lo_ = 0;
    int hi_ = -1;
    std::vector<std::uint8_t> bits_;
    std::optional<int> period_;
};

struct ShiftDecision {
    bool equivalent = false;
    // True when only finite windows were compared, so the verdict covers the
    // inspected overlap rather than all of Z.
    bool window_limited = false;
    std::optional<long long> shift;

    explicit operator bool() const { return equivalent; }
};

// E_Z: is there a k with a(n + k) = b(n) for all n? Exact for two periodic
// windows (all shifts within one lcm period are checked); for two plain
// windows the verdict is over the maximal overlap per candidate shift and is
// flagged window-limited. Mixing periodic and windowed inputs is an error;
// coerce explicitly with as_windowed()/as_periodic().
ShiftDecision shift_equivalent(const BitWindow& a, const BitWindow& b);

// Representative of an E_Z class.
struct ShiftClass {
    BitWindow representative;
};

}  // namespace vt::tour

#endif
