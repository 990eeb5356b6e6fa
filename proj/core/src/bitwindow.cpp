#include "vtcomb/bitwindow.hpp"

#include <numeric>

#include "vtcomb/errors.hpp"

namespace vt::tour {

namespace {

long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

BitWindow::BitWindow(int lo, std::vector<std::uint8_t> bits, std::optional<int> period)
    : lo_(lo), hi_(lo + static_cast<int>(bits.size()) - 1), bits_(std::move(bits)),
      period_(period) {
    if (bits_.empty()) throw invalid_input("bit window must be nonempty");
    if (lo_ > 0 || hi_ < 0) throw invalid_input("bit window domain must contain 0");
    for (auto b : bits_)
        if (b > 1) throw invalid_input("bits must be 0 or 1");
    if (period_) {
        if (*period_ < 1) throw invalid_input("period must be positive");
        if (static_cast<int>(bits_.size()) < *period_)
            throw invalid_input("periodic window must span at least one period");
        for (std::size_t i = static_cast<std::size_t>(*period_); i < bits_.size(); ++i)
            if (bits_[i] != bits_[i - static_cast<std::size_t>(*period_)])
                throw invalid_input("window bits are inconsistent with the declared period");
    }
}

BitWindow BitWindow::from_pattern(const std::string& bits, int lo, std::optional<int> period) {
    std::vector<std::uint8_t> v;
    v.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw invalid_input("bit pattern must be over {0,1}");
        v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitWindow(lo, std::move(v), period);
}

int BitWindow::period() const {
    if (!period_) throw invalid_input("bit window is not periodic");
    return *period_;
}

bool BitWindow::resolvable(long long n) const {
    return period_.has_value() || (n >= lo_ && n <= hi_);
}

int BitWindow::bit(long long n) const {
    if (n >= lo_ && n <= hi_) return bits_[static_cast<std::size_t>(n - lo_)];
    if (!period_)
        throw missing_offset("bit index " + std::to_string(n) + " outside window [" +
                             std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    return bits_[static_cast<std::size_t>(floor_mod(n - lo_, *period_))];
}

BitWindow BitWindow::shifted(int k) const {
    if (!period_) throw invalid_input("shifted() requires a periodic window");
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out[i] = static_cast<std::uint8_t>(bit(lo_ + static_cast<long long>(i) - k));
    return BitWindow(lo_, std::move(out), period_);
}

BitWindow BitWindow::as_windowed() const { return BitWindow(lo_, bits_, std::nullopt); }

BitWindow BitWindow::as_periodic(int period) const { return BitWindow(lo_, bits_, period); }

std::string BitWindow::pattern_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

ShiftDecision shift_equivalent(const BitWindow& a, const BitWindow& b) {
    if (a.periodic() != b.periodic())
        throw invalid_input(
            "shift equivalence needs both windows periodic or both plain; coerce explicitly");

    if (a.periodic()) {
        long long span = std::lcm(static_cast<long long>(a.period()),
                                  static_cast<long long>(b.period()));
        for (long long k = 0; k < span; ++k) {
            bool match = true;
            for (long long n = 0; n < span && match; ++n)
                if (a.bit(n + k) != b.bit(n)) match = false;
            if (match) return {true, false, k};
        }
        return {false, false, std::nullopt};
    }

    // Window-limited: compare the overlap for every shift that leaves one.
    for (long long k = a.lo() - b.hi(); k <= a.hi() - b.lo(); ++k) {
        long long from = std::max<long long>(b.lo(), a.lo() - k);
        long long to = std::min<long long>(b.hi(), a.hi() - k);
        if (from > to) continue;
        bool match = true;
        for (long long n = from; n <= to && match; ++n)
            if (a.bit(n + k) != b.bit(n)) match = false;
        if (match) return {true, true, k};
    }
    return {false, true, std::nullopt};
}

}  // namespace vt::tour
