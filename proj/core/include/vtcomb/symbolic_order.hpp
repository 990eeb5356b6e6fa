#ifndef VTCOMB_SYMBOLIC_ORDER_HPP
#define VTCOMB_SYMBOLIC_ORDER_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "vtcomb/ordinal.hpp"

namespace vt::linord {

// Symbolic countable linear orders:
//   One | Z | Q | ZPow(alpha) | Prod(left, right) | Fin(n >= 2)
// Prod(A, B) means B-many stacked copies of A (the right factor is the
// significant one), so ZPow(a+1) = Prod(ZPow(a), Z). ZPow(0) normalizes to
// One at construction.
//
// Text format: `1`, `Z`, `Q`, `Z^3`, `Z^w`, `Z^(w*2 + 1)`, `Fin(4)`,
// products `Z^2 * Q` (left associative).
class SymbolicOrder {
public:
    enum class Kind { One, Z, Q, ZPow, Prod, Fin };

    static SymbolicOrder one();
    static SymbolicOrder z();
    static SymbolicOrder q();
    static SymbolicOrder zpow(const Ordinal& alpha);
    static SymbolicOrder prod(const SymbolicOrder& left, const SymbolicOrder& right);
    static SymbolicOrder fin(std::uint64_t n);

    Kind kind() const { return kind_; }
    const Ordinal& alpha() const;         // ZPow
    std::uint64_t fin_size() const;       // Fin
    const SymbolicOrder& left() const;    // Prod
    const SymbolicOrder& right() const;   // Prod

    std::string to_string() const;
    static SymbolicOrder parse(const std::string& text);

    bool operator==(const SymbolicOrder& o) const;

private:
    SymbolicOrder() = default;

    Kind kind_ = Kind::One;
    Ordinal alpha_;
    std::uint64_t n_ = 0;
    std::shared_ptr<const SymbolicOrder> left_;
    std::shared_ptr<const SymbolicOrder> right_;
};

// One condensation step, symbolically:
//   Fin(n) -> One, Z -> One, Q -> Q, One -> One,
//   ZPow(a+1) -> ZPow(a),
//   ZPow(lambda) -> ZPow(lambda) for limit lambda (one quotient step does not
//     change the order type, since 1 + lambda = lambda; the classification
//     handles the limit jump),
//   Prod(A, B) -> Prod(condense(A), B) when A is Z or ZPow (condensation
//     classes cover A); anything else is outside the supported fragment and
//     raises vt::unsupported_term.
SymbolicOrder condense(const SymbolicOrder& t);

struct ClassifyResult {
    bool vertex_transitive = false;
    Ordinal alpha;        // valid when vertex_transitive
    bool tail_q = false;  // false: Z^alpha, true: Z^alpha * Q
    std::string reason;   // valid when !vertex_transitive
};

// Vertex-transitive classification: every VT term is Z^alpha or Z^alpha * Q;
// alpha equals the number of condensation iterations (as an ordinal) needed
// to reach the fixed point. Inputs that provably violate vertex-transitivity
// (Fin(n), discrete-over-dense stacks, ...) report not-vertex-transitive.
ClassifyResult classify_vt(const SymbolicOrder& t);

}  // namespace vt::linord

#endif
