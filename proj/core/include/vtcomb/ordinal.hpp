#ifndef VTCOMB_ORDINAL_HPP
#define VTCOMB_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vt::linord {

enum class Cmp { lt = -1, eq = 0, gt = 1 };

struct OrdinalTerm;

// Ordinal below epsilon_0 in Cantor normal form: a finite sum of terms
// w^e * c with strictly decreasing exponents e (themselves notations) and
// coefficients c >= 1. Zero is the empty sum.
//
// Text format: `w^2*3 + w*1 + 4`; nested exponents parenthesized, e.g.
// `w^(w*2 + 1)*2`.
class Ordinal {
public:
    Ordinal();
    ~Ordinal();
    Ordinal(const Ordinal&);
    Ordinal(Ordinal&&) noexcept;
    Ordinal& operator=(const Ordinal&);
    Ordinal& operator=(Ordinal&&) noexcept;

    static Ordinal zero();
    static Ordinal from_nat(std::uint64_t n);
    static Ordinal omega();
    // w^exponent * coeff (coeff >= 1).
    static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coeff = 1);

    bool is_zero() const;
    bool is_finite() const;
    std::uint64_t finite_value() const;  // valid only when is_finite()

    // A nonzero ordinal is a successor iff its trailing term has exponent 0.
    bool is_successor() const;
    bool is_limit() const;

    Ordinal successor() const;
    Ordinal predecessor() const;  // valid only for successors

    // k-th element of the canonical fundamental sequence of a limit ordinal;
    // strictly increasing in k and cofinal.
    Ordinal fundamental(std::uint64_t k) const;

    const std::vector<OrdinalTerm>& terms() const;

    std::string to_string() const;
    static Ordinal parse(const std::string& text);

    friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
    friend Cmp ord_compare(const Ordinal& a, const Ordinal& b);

    bool operator==(const Ordinal& o) const { return ord_compare(*this, o) == Cmp::eq; }
    bool operator<(const Ordinal& o) const { return ord_compare(*this, o) == Cmp::lt; }
    bool operator<=(const Ordinal& o) const { return ord_compare(*this, o) != Cmp::gt; }
    bool operator>(const Ordinal& o) const { return ord_compare(*this, o) == Cmp::gt; }
    bool operator>=(const Ordinal& o) const { return ord_compare(*this, o) != Cmp::lt; }

private:
    std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
    Ordinal exponent;
    std::uint64_t coeff = 1;
};

// Standard CNF comparison: leading exponents, then coefficients, then tails.
Cmp ord_compare(const Ordinal& a, const Ordinal& b);

// CNF addition (absorbs lower terms of the left summand).
Ordinal operator+(const Ordinal& a, const Ordinal& b);

// Desk-scale ordinal-isomorphism decision: equality of canonical notations.
inline bool ordinal_iso(const Ordinal& a, const Ordinal& b) {
    return ord_compare(a, b) == Cmp::eq;
}

}  // namespace vt::linord

#endif
