#include "vtcomb/ordinal.hpp"

#include <cctype>
#include <sstream>

#include "vtcomb/errors.hpp"

namespace vt::linord {

Ordinal::Ordinal() = default;
Ordinal::~Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;

Ordinal Ordinal::zero() { return Ordinal(); }

Ordinal Ordinal::from_nat(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back({Ordinal(), n});
    return o;
}

Ordinal Ordinal::omega() { return omega_pow(from_nat(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coeff) {
    if (coeff == 0) throw invalid_input("CNF coefficient must be >= 1");
    Ordinal o;
    o.terms_.push_back({exponent, coeff});
    return o;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw invalid_input("finite_value on an infinite ordinal");
    return terms_.empty() ? 0 : terms_[0].coeff;
}

bool Ordinal::is_successor() const {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

Ordinal Ordinal::successor() const { return *this + from_nat(1); }

Ordinal Ordinal::predecessor() const {
    if (!is_successor()) throw invalid_input("predecessor of a non-successor ordinal");
    Ordinal o = *this;
    if (--o.terms_.back().coeff == 0) o.terms_.pop_back();
    return o;
}

Ordinal Ordinal::fundamental(std::uint64_t k) const {
    if (!is_limit()) throw invalid_input("fundamental sequence of a non-limit ordinal");
    // Split off one copy of the last term: *this = base + w^e, e > 0.
    Ordinal base = *this;
    Ordinal e = base.terms_.back().exponent;
    if (--base.terms_.back().coeff == 0) base.terms_.pop_back();
    if (e.is_successor()) {
        // (base + w^(f+1))[k] = base + w^f * k
        Ordinal f = e.predecessor();
        return k == 0 ? base : base + omega_pow(f, k);
    }
    // (base + w^e)[k] = base + w^(e[k]) for limit e
    return base + omega_pow(e.fundamental(k), 1);
}

const std::vector<OrdinalTerm>& Ordinal::terms() const { return terms_; }

Cmp ord_compare(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms_;
    const auto& tb = b.terms_;
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        Cmp ce = ord_compare(ta[i].exponent, tb[i].exponent);
        if (ce != Cmp::eq) return ce;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? Cmp::lt : Cmp::gt;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? Cmp::lt : Cmp::gt;
    return Cmp::eq;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& lead_exp = b.terms_.front().exponent;
    Ordinal out;
    for (const auto& t : a.terms_) {
        Cmp c = ord_compare(t.exponent, lead_exp);
        if (c == Cmp::gt) {
            out.terms_.push_back(t);
        } else if (c == Cmp::eq) {
            out.terms_.push_back({t.exponent, t.coeff + b.terms_.front().coeff});
            out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
            return out;
        } else {
            break;  // absorbed
        }
    }
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

std::string Ordinal::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        const auto& t = terms_[i];
        if (t.exponent.is_zero()) {
            os << t.coeff;
        } else if (t.exponent == from_nat(1)) {
            os << "w*" << t.coeff;
        } else if (t.exponent.is_finite()) {
            os << "w^" << t.exponent.finite_value() << "*" << t.coeff;
        } else {
            os << "w^(" << t.exponent.to_string() << ")*" << t.coeff;
        }
    }
    return os.str();
}

namespace {

struct Parser {
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

    std::uint64_t number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw invalid_input("ordinal parse error: digit expected at position " +
                                std::to_string(pos) + " in '" + s + "'");
        std::uint64_t n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
        return n;
    }

    Ordinal expr() {
        Ordinal total = term();
        while (eat('+')) total = total + term();
        return total;
    }

    Ordinal term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            Ordinal exponent = Ordinal::from_nat(1);
            if (eat('^')) exponent = factor();
            std::uint64_t coeff = 1;
            if (eat('*')) coeff = number();
            if (coeff == 0) throw invalid_input("ordinal parse error: zero coefficient");
            return Ordinal::omega_pow(exponent, coeff);
        }
        return Ordinal::from_nat(number());
    }

    Ordinal factor() {
        skip_ws();
        if (eat('(')) {
            Ordinal inner = expr();
            if (!eat(')')) throw invalid_input("ordinal parse error: missing ')' in '" + s + "'");
            return inner;
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return Ordinal::omega();
        }
        return Ordinal::from_nat(number());
    }
};

}  // namespace

Ordinal Ordinal::parse(const std::string& text) {
    Parser p{text};
    Ordinal o = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw invalid_input("ordinal parse error: trailing input in '" + text + "'");
    return o;
}

}  // namespace vt::linord
