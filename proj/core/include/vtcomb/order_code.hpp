#ifndef VTCOMB_ORDER_CODE_HPP
#define VTCOMB_ORDER_CODE_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vtcomb/ordinal.hpp"
#include "vtcomb/zelement.hpp"

namespace vt::linord {

// A coded countable linear order: a strict total comparator on natural-number
// element codes plus a deterministic enumeration of element codes. Codes are
// built by the Z^alpha recursion:
//   alpha = 0:        the one-point order (element code 0)
//   alpha = 1:        order type Z via the zigzag coding of the integers
//   alpha = beta + 1: pairing product <n0, n1>, n1 the significant Z-block
//                     index and n0 the within-block Z^beta element
//   alpha limit:      mirrored-sum + 1 + sum over blocks Z^{alpha'} * omega,
//                     alpha' < alpha, with tag/ordinal/copy/element codes
// plus order type Q and products Z^alpha * Q for the dense side.
//
// Z^alpha-family codes also carry the canonical semantic maps decode/encode
// between element codes and ZElements; the comparator never consults them,
// so the two routes can be cross-checked.
class OrderCode {
public:
    enum class Kind { One, Z, Rational, Product, LimitSum, QProduct };

    virtual ~OrderCode() = default;

    virtual Kind kind() const = 0;
    virtual bool is_element(const mpz_class& n) const = 0;
    virtual Cmp compare(const mpz_class& n, const mpz_class& m) const = 0;
    virtual std::vector<mpz_class> enumerate(std::size_t count) const = 0;

    // Realized exponent for Z^alpha-family codes; throws for Q-side codes.
    virtual const Ordinal& alpha() const;

    // Canonical semantics for Z^alpha-family codes; throw for Q-side codes.
    virtual ZElement decode(const mpz_class& n) const;
    virtual std::optional<mpz_class> encode(const ZElement& z) const;

    // Child code for composite kinds (Product / QProduct inner), else null.
    virtual std::shared_ptr<const OrderCode> inner() const { return nullptr; }
};

using OrderCodePtr = std::shared_ptr<const OrderCode>;

// Memoized builder of the Z^alpha code, alpha < epsilon_0 in CNF.
OrderCodePtr z_power_code(const Ordinal& alpha);

// Order type Q (reduced-fraction codes) and Z^alpha * Q.
OrderCodePtr rational_code();
OrderCodePtr z_power_q_code(const Ordinal& alpha);

// Cantor pairing on arbitrary naturals, fixed bit-exactly.
mpz_class cantor_pair(const mpz_class& a, const mpz_class& b);
std::pair<mpz_class, mpz_class> cantor_unpair(const mpz_class& z);

// Zigzag coding of the integers: 0, -1, 1, -2, 2, ...
long long zigzag_decode(const mpz_class& n);
mpz_class zigzag_encode(long long v);

// Godel coding of CNF notations as naturals (used inside limit codes).
mpz_class ordinal_to_nat(const Ordinal& a);
Ordinal ordinal_from_nat(const mpz_class& n);

// Deterministic sample of ZElements of Z^alpha, biased toward the large
// positions that distinguish nearby exponents (probes are emitted with
// positions descending).
std::vector<ZElement> sample_z_elements(const Ordinal& alpha, std::size_t count);

struct CodeCheck {
    bool ok = false;
    std::string detail;
};

// Deterministic back-and-forth between `sample_size` elements of the code
// and Z^alpha (via z_compare):
//  - forth: every enumerated element must decode with support below alpha and
//    the comparator must agree pairwise with z_compare on the decodes;
//  - back: every sampled ZElement of Z^alpha must be realized by some element
//    code (decode(encode(z)) == z).
// Returns false with a witness description on any failure; throws
// vt::inconclusive when the enumeration cannot produce enough elements.
CodeCheck code_compare_with_symbolic(const Ordinal& alpha, const OrderCode& code,
                                     std::size_t sample_size);

// Sample-level discreteness of a Z^alpha-family code: every enumerated
// element has an immediate successor and predecessor among element codes and
// no enumerated element lies strictly between.
bool sample_two_sided_discrete(const OrderCode& code, std::size_t count);

// Sample-level density of the Q side: every adjacent pair in the sorted
// sample (with distinct significant Q-coordinate, for QProduct) admits a
// constructed element strictly between.
bool sample_dense(const OrderCode& code, std::size_t count);

}  // namespace vt::linord

#endif
