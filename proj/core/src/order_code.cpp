#include "vtcomb/order_code.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "vtcomb/errors.hpp"

namespace vt::linord {

mpz_class cantor_pair(const mpz_class& a, const mpz_class& b) {
    mpz_class s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<mpz_class, mpz_class> cantor_unpair(const mpz_class& z) {
    mpz_class disc = 8 * z + 1;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    mpz_class t = (root - 1) / 2;
    mpz_class w = t * (t + 1) / 2;
    mpz_class b = z - w;
    mpz_class a = t - b;
    return {a, b};
}

namespace {

mpz_class zigzag_decode_mpz(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return n / 2;
    return -((n + 1) / 2);
}

long long to_ll(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p())
        throw Error("value-overflow", std::string(what) + " does not fit a machine integer");
    return v.get_si();
}

}  // namespace

long long zigzag_decode(const mpz_class& n) { return to_ll(zigzag_decode_mpz(n), "zigzag value"); }

mpz_class zigzag_encode(long long v) {
    if (v >= 0) return mpz_class(2 * mpz_class(static_cast<long>(v)));
    return mpz_class(-2 * mpz_class(static_cast<long>(v)) - 1);
}

mpz_class ordinal_to_nat(const Ordinal& a) {
    mpz_class code = 0;
    const auto& terms = a.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        mpz_class head = cantor_pair(ordinal_to_nat(it->exponent), mpz_class(it->coeff) - 1);
        code = cantor_pair(head, code) + 1;
    }
    return code;
}

Ordinal ordinal_from_nat(const mpz_class& n) {
    if (n == 0) return Ordinal::zero();
    auto [head, tail] = cantor_unpair(n - 1);
    auto [exp_code, coeff_code] = cantor_unpair(head);
    Ordinal exponent = ordinal_from_nat(exp_code);
    if (!coeff_code.fits_ulong_p()) throw invalid_input("ordinal code: coefficient too large");
    std::uint64_t coeff = coeff_code.get_ui() + 1;
    Ordinal rest = ordinal_from_nat(tail);
    // Canonicity: this term's exponent must strictly dominate the rest.
    if (!rest.is_zero() && !(rest.terms().front().exponent < exponent))
        throw invalid_input("ordinal code is not in canonical form");
    return Ordinal::omega_pow(exponent, coeff) + rest;
}

const Ordinal& OrderCode::alpha() const {
    throw invalid_input("this order code does not realize a Z^alpha");
}

ZElement OrderCode::decode(const mpz_class&) const {
    throw invalid_input("decode is defined only for Z^alpha-family codes");
}

std::optional<mpz_class> OrderCode::encode(const ZElement&) const {
    throw invalid_input("encode is defined only for Z^alpha-family codes");
}

namespace {

const Ordinal kZero = Ordinal::zero();
const Ordinal kOne = Ordinal::from_nat(1);

class OneCode final : public OrderCode {
public:
    Kind kind() const override { return Kind::One; }
    bool is_element(const mpz_class& n) const override { return n == 0; }
    Cmp compare(const mpz_class&, const mpz_class&) const override { return Cmp::eq; }
    std::vector<mpz_class> enumerate(std::size_t count) const override {
        return count == 0 ? std::vector<mpz_class>{} : std::vector<mpz_class>{0};
    }
    const Ordinal& alpha() const override { return kZero; }
    ZElement decode(const mpz_class& n) const override {
        if (n != 0) throw invalid_input("the one-point order has only element code 0");
        return ZElement::zero();
    }
    std::optional<mpz_class> encode(const ZElement& z) const override {
        if (z.is_zero()) return mpz_class(0);
        return std::nullopt;
    }
};

class ZCode final : public OrderCode {
public:
    Kind kind() const override { return Kind::Z; }
    bool is_element(const mpz_class&) const override { return true; }
    Cmp compare(const mpz_class& n, const mpz_class& m) const override {
        mpz_class a = zigzag_decode_mpz(n);
        mpz_class b = zigzag_decode_mpz(m);
        if (a == b) return Cmp::eq;
        return a < b ? Cmp::lt : Cmp::gt;
    }
    std::vector<mpz_class> enumerate(std::size_t count) const override {
        std::vector<mpz_class> out;
        for (std::size_t i = 0; i < count; ++i) out.emplace_back(static_cast<unsigned long>(i));
        return out;
    }
    const Ordinal& alpha() const override { return kOne; }
    ZElement decode(const mpz_class& n) const override {
        return ZElement::unit(kZero, zigzag_decode(n));
    }
    std::optional<mpz_class> encode(const ZElement& z) const override {
        if (!z.support_below(kOne)) return std::nullopt;
        return zigzag_encode(z.value_at(kZero));
    }
};

class ProductCode final : public OrderCode {
public:
    explicit ProductCode(OrderCodePtr inner)
        : inner_(std::move(inner)), alpha_(inner_->alpha() + Ordinal::from_nat(1)) {}

    Kind kind() const override { return Kind::Product; }
    std::shared_ptr<const OrderCode> inner() const override { return inner_; }

    bool is_element(const mpz_class& n) const override {
        auto [n0, n1] = cantor_unpair(n);
        (void)n1;
        return inner_->is_element(n0);
    }

    Cmp compare(const mpz_class& n, const mpz_class& m) const override {
        auto [n0, n1] = cantor_unpair(n);
        auto [m0, m1] = cantor_unpair(m);
        mpz_class bn = zigzag_decode_mpz(n1);
        mpz_class bm = zigzag_decode_mpz(m1);
        if (bn != bm) return bn < bm ? Cmp::lt : Cmp::gt;
        return inner_->compare(n0, m0);
    }

    std::vector<mpz_class> enumerate(std::size_t count) const override {
        std::vector<mpz_class> out;
        std::vector<mpz_class> inner_list = inner_->enumerate(count);
        for (std::size_t w = 0; out.size() < count && w < 4 * count + 4; ++w) {
            for (std::size_t i = 0; i <= w && out.size() < count; ++i) {
                if (i >= inner_list.size()) break;
                out.push_back(
                    cantor_pair(inner_list[i], mpz_class(static_cast<unsigned long>(w - i))));
            }
        }
        return out;
    }

    const Ordinal& alpha() const override { return alpha_; }

    ZElement decode(const mpz_class& n) const override {
        auto [n0, n1] = cantor_unpair(n);
        return inner_->decode(n0).with_value(inner_->alpha(), zigzag_decode(n1));
    }

    std::optional<mpz_class> encode(const ZElement& z) const override {
        if (!z.support_below(alpha_)) return std::nullopt;
        const Ordinal& beta = inner_->alpha();
        long long v = z.value_at(beta);
        auto in = inner_->encode(z.with_value(beta, 0));
        if (!in) return std::nullopt;
        return cantor_pair(*in, zigzag_encode(v));
    }

private:
    OrderCodePtr inner_;
    Ordinal alpha_;
};

// Positions below `top` reachable by predecessor steps and fundamental
// sequences; deterministic, sorted ascending.
std::vector<Ordinal> positions_below(const Ordinal& top, std::size_t want) {
    std::vector<Ordinal> queue{top};
    std::set<std::string> seen{top.to_string()};
    std::vector<Ordinal> found;
    std::size_t qi = 0;
    while (qi < queue.size() && found.size() < 4 * want + 16) {
        Ordinal g = queue[qi++];
        std::vector<Ordinal> children;
        if (g.is_successor()) {
            children.push_back(g.predecessor());
        } else if (g.is_limit()) {
            for (std::uint64_t j = 0; j <= 16; ++j) children.push_back(g.fundamental(j));
        }
        for (auto& c : children) {
            if (seen.insert(c.to_string()).second) {
                found.push_back(c);
                queue.push_back(c);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Ordinal& a, const Ordinal& b) { return a < b; });
    return found;
}

class LimitCode final : public OrderCode {
public:
    explicit LimitCode(Ordinal lambda) : lambda_(std::move(lambda)) {}

    Kind kind() const override { return Kind::LimitSum; }

    struct El {
        int tag;  // 0 left, 1 middle, 2 right
        Ordinal block;
        mpz_class copy;
        mpz_class elem;
    };

    std::optional<El> decompose(const mpz_class& n) const {
        auto [tag, rest] = cantor_unpair(n);
        if (tag > 2) return std::nullopt;
        int t = static_cast<int>(tag.get_ui());
        if (t == 1) {
            if (rest != 0) return std::nullopt;
            return El{1, Ordinal::zero(), 0, 0};
        }
        auto [a, kr] = cantor_unpair(rest);
        Ordinal block;
        try {
            block = ordinal_from_nat(a);
        } catch (const Error&) {
            return std::nullopt;
        }
        if (!(block < lambda_)) return std::nullopt;
        auto [k, s] = cantor_unpair(kr);
        if (!z_power_code(block)->is_element(s)) return std::nullopt;
        return El{t, std::move(block), std::move(k), std::move(s)};
    }

    bool is_element(const mpz_class& n) const override { return decompose(n).has_value(); }

    Cmp compare(const mpz_class& n, const mpz_class& m) const override {
        auto x = decompose(n);
        auto y = decompose(m);
        if (!x || !y) throw invalid_input("limit-code compare on a non-element");
        if (x->tag != y->tag) return x->tag < y->tag ? Cmp::lt : Cmp::gt;
        if (x->tag == 1) return Cmp::eq;
        Cmp right = right_compare(*x, *y);
        if (x->tag == 2) return right;
        // The left part mirrors the right part.
        if (right == Cmp::lt) return Cmp::gt;
        if (right == Cmp::gt) return Cmp::lt;
        return Cmp::eq;
    }

    std::vector<mpz_class> enumerate(std::size_t count) const override {
        std::vector<mpz_class> out;
        if (count == 0) return out;
        out.push_back(cantor_pair(1, 0));  // the middle point
        std::vector<Ordinal> blocks = positions_below(lambda_, std::max<std::size_t>(8, count / 4));
        if (blocks.empty()) return out;

        // Sweep every block once per phase so that elements from the high
        // blocks (which separate nearby exponents) appear early; within a
        // block, the phase advances copy index and element index diagonally.
        std::vector<std::vector<mpz_class>> cached(blocks.size());
        auto block_element = [&](std::size_t i, std::size_t j) -> const mpz_class* {
            auto& vec = cached[i];
            if (vec.size() <= j) vec = z_power_code(blocks[i])->enumerate(std::max<std::size_t>(2 * j + 2, 8));
            return vec.size() > j ? &vec[j] : nullptr;
        };

        for (std::size_t phase = 0; out.size() < count && phase < 2 * count + 2; ++phase) {
            for (std::size_t i = 0; i < blocks.size() && out.size() < count; ++i) {
                for (std::size_t k = 0; k <= phase && out.size() < count; ++k) {
                    std::size_t j = phase - k;
                    const mpz_class* s = block_element(i, j);
                    if (!s) continue;
                    mpz_class payload =
                        cantor_pair(ordinal_to_nat(blocks[i]),
                                    cantor_pair(mpz_class(static_cast<unsigned long>(k)), *s));
                    out.push_back(cantor_pair(2, payload));
                    if (out.size() < count) out.push_back(cantor_pair(0, payload));
                }
            }
        }
        return out;
    }

    const Ordinal& alpha() const override { return lambda_; }

    ZElement decode(const mpz_class& n) const override {
        auto x = decompose(n);
        if (!x) throw invalid_input("limit-code decode on a non-element");
        if (x->tag == 1) return ZElement::zero();
        ZElement inner = z_power_code(x->block)->decode(x->elem);
        long long lead = to_ll(x->copy + 1, "limit-code copy index");
        ZElement right = inner.with_value(x->block, lead);
        return x->tag == 2 ? right : right.negated();
    }

    std::optional<mpz_class> encode(const ZElement& z) const override {
        if (z.is_zero()) return cantor_pair(1, 0);
        if (!z.support_below(lambda_)) return std::nullopt;
        const auto& top = z.support().back();
        const Ordinal& mu = top.first;
        long long lead = top.second;
        ZElement rest = z.with_value(mu, 0);
        if (lead > 0) {
            auto s = z_power_code(mu)->encode(rest);
            if (!s) return std::nullopt;
            return cantor_pair(
                2, cantor_pair(ordinal_to_nat(mu), cantor_pair(mpz_class(static_cast<long>(lead - 1)), *s)));
        }
        auto s = z_power_code(mu)->encode(rest.negated());
        if (!s) return std::nullopt;
        return cantor_pair(0,
                           cantor_pair(ordinal_to_nat(mu), cantor_pair(mpz_class(static_cast<long>(-lead - 1)), *s)));
    }

private:
    Cmp right_compare(const El& x, const El& y) const {
        Cmp cb = ord_compare(x.block, y.block);
        if (cb != Cmp::eq) return cb;
        if (x.copy != y.copy) return x.copy < y.copy ? Cmp::lt : Cmp::gt;
        return z_power_code(x.block)->compare(x.elem, y.elem);
    }

    Ordinal lambda_;
};

class RationalCode final : public OrderCode {
public:
    Kind kind() const override { return Kind::Rational; }

    static std::pair<mpz_class, mpz_class> value(const mpz_class& n) {
        auto [a, b] = cantor_unpair(n);
        return {zigzag_decode_mpz(a), b + 1};  // numerator / denominator
    }

    static std::optional<mpz_class> encode_fraction(const mpz_class& num, const mpz_class& den) {
        if (den <= 0) return std::nullopt;
        mpz_class g;
        mpz_class an = abs(num);
        mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), den.get_mpz_t());
        mpz_class rn = num;
        mpz_class rd = den;
        if (g != 0) {
            rn /= g;
            rd /= g;
        }
        if (rn == 0) rd = 1;
        mpz_class a = rn >= 0 ? mpz_class(2 * rn) : mpz_class(-2 * rn - 1);
        return cantor_pair(a, rd - 1);
    }

    bool is_element(const mpz_class& n) const override {
        auto [num, den] = value(n);
        if (num == 0) return den == 1;
        mpz_class g;
        mpz_class an = abs(num);
        mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), den.get_mpz_t());
        return g == 1;
    }

    Cmp compare(const mpz_class& n, const mpz_class& m) const override {
        auto [an, ad] = value(n);
        auto [bn, bd] = value(m);
        mpz_class lhs = an * bd;
        mpz_class rhs = bn * ad;
        if (lhs == rhs) return Cmp::eq;
        return lhs < rhs ? Cmp::lt : Cmp::gt;
    }

    std::vector<mpz_class> enumerate(std::size_t count) const override {
        std::vector<mpz_class> out;
        for (mpz_class n = 0; out.size() < count && n < 1000000; ++n)
            if (is_element(n)) out.push_back(n);
        return out;
    }
};

class QProductCode final : public OrderCode {
public:
    explicit QProductCode(OrderCodePtr inner) : inner_(std::move(inner)) {}

    Kind kind() const override { return Kind::QProduct; }
    std::shared_ptr<const OrderCode> inner() const override { return inner_; }
    const Ordinal& alpha() const override { return inner_->alpha(); }

    bool is_element(const mpz_class& n) const override {
        auto [n0, n1] = cantor_unpair(n);
        return inner_->is_element(n0) && q_.is_element(n1);
    }

    Cmp compare(const mpz_class& n, const mpz_class& m) const override {
        auto [n0, n1] = cantor_unpair(n);
        auto [m0, m1] = cantor_unpair(m);
        Cmp cq = q_.compare(n1, m1);
        if (cq != Cmp::eq) return cq;
        return inner_->compare(n0, m0);
    }

    std::vector<mpz_class> enumerate(std::size_t count) const override {
        std::vector<mpz_class> out;
        std::vector<mpz_class> inner_list = inner_->enumerate(count);
        std::vector<mpz_class> q_list = q_.enumerate(count);
        for (std::size_t w = 0; out.size() < count && w < 4 * count + 4; ++w)
            for (std::size_t i = 0; i <= w && out.size() < count; ++i) {
                std::size_t j = w - i;
                if (i >= inner_list.size() || j >= q_list.size()) continue;
                out.push_back(cantor_pair(inner_list[i], q_list[j]));
            }
        return out;
    }

private:
    OrderCodePtr inner_;
    RationalCode q_;
};

}  // namespace

OrderCodePtr z_power_code(const Ordinal& alpha) {
    static std::map<std::string, OrderCodePtr> memo;
    static std::mutex mu;
    std::string key = alpha.to_string();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    OrderCodePtr code;
    if (alpha.is_zero()) {
        code = std::make_shared<OneCode>();
    } else if (alpha == Ordinal::from_nat(1)) {
        code = std::make_shared<ZCode>();
    } else if (alpha.is_successor()) {
        code = std::make_shared<ProductCode>(z_power_code(alpha.predecessor()));
    } else {
        code = std::make_shared<LimitCode>(alpha);
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, code);
    return code;
}

OrderCodePtr rational_code() {
    static OrderCodePtr q = std::make_shared<RationalCode>();
    return q;
}

OrderCodePtr z_power_q_code(const Ordinal& alpha) {
    return std::make_shared<QProductCode>(z_power_code(alpha));
}

std::vector<ZElement> sample_z_elements(const Ordinal& alpha, std::size_t count) {
    std::vector<ZElement> out;
    out.push_back(ZElement::zero());
    std::vector<Ordinal> pos = positions_below(alpha, std::max<std::size_t>(8, count / 2));
    std::reverse(pos.begin(), pos.end());  // large positions first: they distinguish exponents
    for (long long mag : {1, 2}) {
        for (const auto& p : pos) {
            if (out.size() >= count) return out;
            out.push_back(ZElement::unit(p, mag));
            if (out.size() >= count) return out;
            out.push_back(ZElement::unit(p, -mag));
        }
    }
    for (std::size_t i = 0; i < pos.size() && out.size() < count; ++i)
        for (std::size_t j = i + 1; j < pos.size() && out.size() < count; ++j)
            for (long long v1 : {1, -1})
                for (long long v2 : {1, -1}) {
                    if (out.size() >= count) break;
                    out.push_back(ZElement({{pos[i], v1}, {pos[j], v2}}));
                }
    return out;
}

CodeCheck code_compare_with_symbolic(const Ordinal& alpha, const OrderCode& code,
                                     std::size_t sample_size) {
    std::vector<mpz_class> elements = code.enumerate(sample_size);
    if (elements.size() < sample_size && code.kind() != OrderCode::Kind::One)
        throw inconclusive("code enumeration produced only " + std::to_string(elements.size()) +
                           " of " + std::to_string(sample_size) + " requested elements");

    std::vector<ZElement> decodes;
    decodes.reserve(elements.size());
    for (const auto& e : elements) {
        ZElement z;
        try {
            z = code.decode(e);
        } catch (const Error& err) {
            throw inconclusive(std::string("decode failed during sampling: ") + err.what());
        }
        if (!z.support_below(alpha))
            return {false, "element code " + e.get_str() + " decodes to " + z.to_string() +
                               " with a support position >= alpha = " + alpha.to_string() +
                               " (a condensation class outside Z^alpha)"};
        decodes.push_back(std::move(z));
    }

    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            Cmp by_code = code.compare(elements[i], elements[j]);
            Cmp by_z = z_compare_unchecked(decodes[i], decodes[j]);
            if (by_code != by_z)
                return {false, "comparator disagrees with z_compare on " + decodes[i].to_string() +
                                   " vs " + decodes[j].to_string()};
        }

    for (const auto& probe : sample_z_elements(alpha, sample_size)) {
        auto m = code.encode(probe);
        if (!m)
            return {false,
                    "Z^alpha element " + probe.to_string() + " is not realized by any element code"};
        if (!code.is_element(*m) || !(code.decode(*m) == probe))
            return {false, "encode/decode round trip failed for " + probe.to_string()};
    }
    return {true, "order-embedding verified on " + std::to_string(elements.size()) +
                      " element codes and " + std::to_string(sample_size) + " probes"};
}

bool sample_two_sided_discrete(const OrderCode& code, std::size_t count) {
    std::vector<mpz_class> pool = code.enumerate(count);
    for (const auto& e : pool) {
        ZElement z = code.decode(e);
        long long at0 = z.value_at(Ordinal::zero());
        auto up = code.encode(z.with_value(Ordinal::zero(), at0 + 1));
        auto dn = code.encode(z.with_value(Ordinal::zero(), at0 - 1));
        if (!up || !dn) return false;
        if (code.compare(e, *up) != Cmp::lt || code.compare(*dn, e) != Cmp::lt) return false;
        for (const auto& f : pool) {
            if (code.compare(e, f) == Cmp::lt && code.compare(f, *up) == Cmp::lt) return false;
            if (code.compare(*dn, f) == Cmp::lt && code.compare(f, e) == Cmp::lt) return false;
        }
    }
    return true;
}

bool sample_dense(const OrderCode& code, std::size_t count) {
    if (code.kind() != OrderCode::Kind::Rational && code.kind() != OrderCode::Kind::QProduct)
        throw invalid_input("sample_dense expects a Q-side code");

    std::vector<mpz_class> pool = code.enumerate(count);
    std::sort(pool.begin(), pool.end(),
              [&](const mpz_class& a, const mpz_class& b) { return code.compare(a, b) == Cmp::lt; });

    auto q_key = [&](const mpz_class& n) {
        if (code.kind() == OrderCode::Kind::Rational) return n;
        return cantor_unpair(n).second;
    };
    auto between_code = [&](const mpz_class& lo, const mpz_class& hi) -> std::optional<mpz_class> {
        auto [ln, ld] = RationalCode::value(q_key(lo));
        auto [hn, hd] = RationalCode::value(q_key(hi));
        auto mid = RationalCode::encode_fraction(ln + hn, ld + hd);
        if (!mid) return std::nullopt;
        if (code.kind() == OrderCode::Kind::Rational) return mid;
        auto inner = code.inner()->enumerate(1);
        return cantor_pair(inner.at(0), *mid);
    };

    RationalCode q;
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
        const mpz_class& a = pool[i];
        const mpz_class& b = pool[i + 1];
        if (code.compare(a, b) != Cmp::lt) continue;
        if (code.kind() == OrderCode::Kind::QProduct &&
            q.compare(q_key(a), q_key(b)) == Cmp::eq)
            continue;  // same Z-class: discrete inside
        auto mid = between_code(a, b);
        if (!mid) return false;
        if (code.compare(a, *mid) != Cmp::lt || code.compare(*mid, b) != Cmp::lt) return false;
    }
    return true;
}

}  // namespace vt::linord
