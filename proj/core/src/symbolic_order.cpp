#include "vtcomb/symbolic_order.hpp"

#include <cctype>

#include "vtcomb/errors.hpp"

namespace vt::linord {

SymbolicOrder SymbolicOrder::one() {
    SymbolicOrder t;
    t.kind_ = Kind::One;
    return t;
}

SymbolicOrder SymbolicOrder::z() {
    SymbolicOrder t;
    t.kind_ = Kind::Z;
    return t;
}

SymbolicOrder SymbolicOrder::q() {
    SymbolicOrder t;
    t.kind_ = Kind::Q;
    return t;
}

SymbolicOrder SymbolicOrder::zpow(const Ordinal& alpha) {
    if (alpha.is_zero()) return one();
    SymbolicOrder t;
    t.kind_ = Kind::ZPow;
    t.alpha_ = alpha;
    return t;
}

SymbolicOrder SymbolicOrder::prod(const SymbolicOrder& left, const SymbolicOrder& right) {
    SymbolicOrder t;
    t.kind_ = Kind::Prod;
    t.left_ = std::make_shared<SymbolicOrder>(left);
    t.right_ = std::make_shared<SymbolicOrder>(right);
    return t;
}

SymbolicOrder SymbolicOrder::fin(std::uint64_t n) {
    if (n < 2) throw invalid_input("Fin(n) requires n >= 2");
    SymbolicOrder t;
    t.kind_ = Kind::Fin;
    t.n_ = n;
    return t;
}

const Ordinal& SymbolicOrder::alpha() const {
    if (kind_ != Kind::ZPow) throw invalid_input("alpha() on a non-ZPow term");
    return alpha_;
}

std::uint64_t SymbolicOrder::fin_size() const {
    if (kind_ != Kind::Fin) throw invalid_input("fin_size() on a non-Fin term");
    return n_;
}

const SymbolicOrder& SymbolicOrder::left() const {
    if (kind_ != Kind::Prod) throw invalid_input("left() on a non-Prod term");
    return *left_;
}

const SymbolicOrder& SymbolicOrder::right() const {
    if (kind_ != Kind::Prod) throw invalid_input("right() on a non-Prod term");
    return *right_;
}

bool SymbolicOrder::operator==(const SymbolicOrder& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::One:
        case Kind::Z:
        case Kind::Q: return true;
        case Kind::ZPow: return alpha_ == o.alpha_;
        case Kind::Fin: return n_ == o.n_;
        case Kind::Prod: return *left_ == *o.left_ && *right_ == *o.right_;
    }
    return false;
}

std::string SymbolicOrder::to_string() const {
    switch (kind_) {
        case Kind::One: return "1";
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Fin: return "Fin(" + std::to_string(n_) + ")";
        case Kind::ZPow: {
            if (alpha_.is_finite()) return "Z^" + std::to_string(alpha_.finite_value());
            if (alpha_ == Ordinal::omega()) return "Z^w";
            return "Z^(" + alpha_.to_string() + ")";
        }
        case Kind::Prod: {
            auto wrap = [](const SymbolicOrder& t) {
                std::string s = t.to_string();
                return t.kind() == Kind::Prod ? "(" + s + ")" : s;
            };
            return wrap(*left_) + " * " + wrap(*right_);
        }
    }
    return "?";
}

namespace {

struct TermParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw invalid_input("order term parse error: " + why + " at position " +
                            std::to_string(pos) + " in '" + s + "'");
    }

    std::uint64_t number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("digit expected");
        std::uint64_t n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
        return n;
    }

    Ordinal ord_factor() {
        skip_ws();
        if (eat('(')) {
            std::size_t depth = 1;
            std::size_t start = pos;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
            }
            if (depth != 0) fail("missing ')'");
            return Ordinal::parse(s.substr(start, pos - 1 - start));
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return Ordinal::omega();
        }
        return Ordinal::from_nat(number());
    }

    SymbolicOrder factor() {
        skip_ws();
        if (eat('(')) {
            SymbolicOrder t = product();
            if (!eat(')')) fail("missing ')'");
            return t;
        }
        if (pos >= s.size()) fail("term expected");
        char c = s[pos];
        if (c == '1') {
            ++pos;
            return SymbolicOrder::one();
        }
        if (c == 'Q') {
            ++pos;
            return SymbolicOrder::q();
        }
        if (c == 'Z') {
            ++pos;
            if (eat('^')) return SymbolicOrder::zpow(ord_factor());
            return SymbolicOrder::z();
        }
        if (s.compare(pos, 4, "Fin(") == 0) {
            pos += 4;
            std::uint64_t n = number();
            if (!eat(')')) fail("missing ')' after Fin");
            return SymbolicOrder::fin(n);
        }
        fail("unknown term");
    }

    SymbolicOrder product() {
        SymbolicOrder t = factor();
        while (eat('*')) t = SymbolicOrder::prod(t, factor());
        return t;
    }
};

}  // namespace

SymbolicOrder SymbolicOrder::parse(const std::string& text) {
    TermParser p{text};
    SymbolicOrder t = p.product();
    p.skip_ws();
    if (p.pos != text.size())
        throw invalid_input("order term parse error: trailing input in '" + text + "'");
    return t;
}

SymbolicOrder condense(const SymbolicOrder& t) {
    using Kind = SymbolicOrder::Kind;
    switch (t.kind()) {
        case Kind::One: return SymbolicOrder::one();
        case Kind::Z: return SymbolicOrder::one();
        case Kind::Q: return SymbolicOrder::q();
        case Kind::Fin: return SymbolicOrder::one();
        case Kind::ZPow: {
            const Ordinal& a = t.alpha();
            if (a.is_successor()) return SymbolicOrder::zpow(a.predecessor());
            return SymbolicOrder::zpow(a);  // limit: 1 + lambda = lambda
        }
        case Kind::Prod: {
            const SymbolicOrder& a = t.left();
            if (a.kind() != Kind::Z && a.kind() != Kind::ZPow)
                throw unsupported_term(
                    "condense(Prod(A, B)) is supported only for A in {Z, Z^beta}; got A = " +
                    a.to_string());
            SymbolicOrder ca = condense(a);
            if (ca.kind() == Kind::One) return t.right();
            return SymbolicOrder::prod(ca, t.right());
        }
    }
    throw unsupported_term("unknown term kind");
}

namespace {

// Canonical descriptor of a grammar term as an order type.
struct Desc {
    enum class Tag { VT, Fin, NotVT } tag;
    Ordinal alpha;       // VT
    bool tail_q = false; // VT
    std::uint64_t n = 0; // Fin
    std::string reason;  // NotVT
};

Desc vt_desc(Ordinal a, bool q) { return {Desc::Tag::VT, std::move(a), q, 0, ""}; }
Desc fin_desc(std::uint64_t n) { return {Desc::Tag::Fin, Ordinal::zero(), false, n, ""}; }
Desc not_vt(std::string reason) {
    return {Desc::Tag::NotVT, Ordinal::zero(), false, 0, std::move(reason)};
}

Desc normalize(const SymbolicOrder& t) {
    using Kind = SymbolicOrder::Kind;
    switch (t.kind()) {
        case Kind::One: return vt_desc(Ordinal::zero(), false);
        case Kind::Z: return vt_desc(Ordinal::from_nat(1), false);
        case Kind::Q: return vt_desc(Ordinal::zero(), true);
        case Kind::ZPow: return vt_desc(t.alpha(), false);
        case Kind::Fin: return fin_desc(t.fin_size());
        case Kind::Prod: {
            Desc x = normalize(t.left());
            Desc y = normalize(t.right());
            if (x.tag == Desc::Tag::NotVT) return x;
            if (y.tag == Desc::Tag::NotVT) return y;

            // One absorbs on either side.
            if (x.tag == Desc::Tag::VT && x.alpha.is_zero() && !x.tail_q) return y;
            if (y.tag == Desc::Tag::VT && y.alpha.is_zero() && !y.tail_q) return x;

            if (x.tag == Desc::Tag::VT && x.tail_q)
                // (Z^a * Q) * L = Z^a * (Q * L) = Z^a * Q for nonempty countable L
                return vt_desc(x.alpha, true);

            if (x.tag == Desc::Tag::VT) {  // discrete left factor, alpha >= 1
                if (y.tag == Desc::Tag::VT) return vt_desc(x.alpha + y.alpha, y.tail_q);
                return not_vt("Z^a * Fin(n): the n-fold stack condenses to a " +
                              std::to_string(y.n) + "-element order, which has endpoints");
            }

            // x is Fin(n)
            if (y.tag == Desc::Tag::Fin) return fin_desc(x.n * y.n);
            if (!y.alpha.is_zero())
                // Fin(n) blocks are absorbed by the discrete spine: Fin(n)*Z = Z.
                return vt_desc(y.alpha, y.tail_q);
            return not_vt("Fin(n) * Q mixes finite blocks with a dense index");
        }
    }
    return not_vt("unknown term kind");
}

}  // namespace

ClassifyResult classify_vt(const SymbolicOrder& t) {
    Desc d = normalize(t);
    ClassifyResult r;
    switch (d.tag) {
        case Desc::Tag::VT:
            r.vertex_transitive = true;
            r.alpha = d.alpha;
            r.tail_q = d.tail_q;
            return r;
        case Desc::Tag::Fin:
            r.reason = "a finite order with " + std::to_string(d.n) + " elements has endpoints";
            return r;
        case Desc::Tag::NotVT:
            r.reason = d.reason;
            return r;
    }
    r.reason = "unreachable";
    return r;
}

}  // namespace vt::linord
