#include "vtcomb/raag.hpp"

#include <algorithm>
#include <sstream>

#include "vtcomb/errors.hpp"

namespace vt::raag {

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << 'a' << w[i].gen;
        if (w[i].sign < 0) os << "^-1";
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'a')
            throw invalid_input("bad word token: " + tok);
        int sign = +1;
        std::string digits = tok.substr(1);
        if (auto pos = digits.find("^-1"); pos != std::string::npos) {
            if (pos + 3 != digits.size()) throw invalid_input("bad word token: " + tok);
            sign = -1;
            digits = digits.substr(0, pos);
        }
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw invalid_input("bad word token: " + tok);
        w.push_back({std::stoi(digits), sign});
    }
    return w;
}

void CommutationGraph::check_word(const Word& w) const {
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= g_.vertex_count())
            throw invalid_input("generator index out of range: a" + std::to_string(l.gen));
        if (l.sign != 1 && l.sign != -1) throw invalid_input("letter sign must be +1 or -1");
    }
}

namespace {

// Deletes one cancelling pair g^e ... g^-e whose in-between letters all
// commute with g, if any exists. A word admitting no such pair is geodesic.
bool cancel_once(const CommutationGraph& g, Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].gen == w[i].gen) {
                if (w[j].sign == -w[i].sign) {
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                    return true;
                }
                break;  // same generator, same sign: blocks the scan
            }
            if (!g.commute(w[i].gen, w[j].gen)) break;
        }
    }
    return false;
}

}  // namespace

Word normal_form(const CommutationGraph& g, const Word& w) {
    g.check_word(w);
    Word pool = w;
    while (cancel_once(g, pool)) {
    }

    // Greedy shortlex linearization of the trace: repeatedly extract the
    // smallest letter that commutes past everything before it.
    Word out;
    out.reserve(pool.size());
    while (!pool.empty()) {
        std::size_t best = pool.size();
        for (std::size_t p = 0; p < pool.size(); ++p) {
            bool movable = true;
            for (std::size_t q = 0; q < p && movable; ++q)
                if (!g.commute(pool[q].gen, pool[p].gen)) movable = false;
            if (movable && (best == pool.size() || pool[p] < pool[best])) best = p;
        }
        out.push_back(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

bool words_equal(const CommutationGraph& g, const Word& w1, const Word& w2) {
    return normal_form(g, w1) == normal_form(g, w2);
}

long long exponent_sum(const Word& w) {
    long long s = 0;
    for (const auto& l : w) s += l.sign;
    return s;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word inverse(const Word& w) {
    Word inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(it->inverse());
    return inv;
}

}  // namespace vt::raag
