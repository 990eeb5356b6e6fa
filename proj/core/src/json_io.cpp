#include "vtcomb/json_io.hpp"

#include "vtcomb/errors.hpp"

namespace vt::io {

json digraph_to_json(const LabeledDigraph& d) {
    json arcs = json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back({d.label_of(u), d.label_of(v)});
    return json{{"vertices", d.vertices()}, {"arcs", arcs}};
}

LabeledDigraph digraph_from_json(const json& j, bool oriented) {
    if (!j.contains("vertices") || !j.contains("arcs"))
        throw invalid_input("digraph JSON needs 'vertices' and 'arcs'");
    LabeledDigraph d(j.at("vertices").get<std::vector<std::string>>(), oriented);
    for (const auto& arc : j.at("arcs")) {
        if (!arc.is_array() || arc.size() != 2) throw invalid_input("arc must be a label pair");
        d.add_arc(arc.at(0).get<std::string>(), arc.at(1).get<std::string>());
    }
    return d;
}

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    if (!j.contains("n")) throw invalid_input("graph JSON needs 'n'");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return SimpleGraph(j.at("n").get<int>(), edges);
}

json ball_to_json(const cayley::CayleyBall& b) {
    return json{{"graph", graph_to_json(b.graph.underlying())},
                {"radius", b.radius},
                {"center", b.center},
                {"digraph", digraph_to_json(b.digraph)}};
}

cayley::CayleyBall ball_from_json(const json& j) {
    cayley::CayleyBall b;
    b.graph = raag::CommutationGraph(graph_from_json(j.at("graph")));
    b.radius = j.at("radius").get<int>();
    b.center = j.at("center").get<std::string>();
    b.digraph = digraph_from_json(j.at("digraph"), /*oriented=*/true);
    if (!b.digraph.has_vertex(b.center)) throw invalid_input("ball center missing from digraph");
    for (const auto& label : b.digraph.vertices()) {
        raag::Word w = raag::parse_word(label);
        if (raag::normal_form(b.graph, w) != w)
            throw invalid_input("ball vertex label is not in normal form: " + label);
        if (static_cast<int>(w.size()) > b.radius)
            throw invalid_input("ball vertex exceeds radius: " + label);
        b.words.push_back(std::move(w));
    }
    return b;
}

json bitwindow_to_json(const tour::BitWindow& w) {
    json bits = json::array();
    for (auto b : w.bits()) bits.push_back(static_cast<int>(b));
    json period = nullptr;
    if (w.periodic()) period = w.period();
    return json{{"lo", w.lo()}, {"hi", w.hi()}, {"bits", bits}, {"period", period}};
}

tour::BitWindow bitwindow_from_json(const json& j) {
    std::vector<std::uint8_t> bits;
    for (const auto& b : j.at("bits")) bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    std::optional<int> period;
    if (j.contains("period") && !j.at("period").is_null()) period = j.at("period").get<int>();
    return tour::BitWindow(j.at("lo").get<int>(), std::move(bits), period);
}

json tournament_to_json(const tour::GridTournament& t) {
    return json{{"m_lo", t.m_lo},     {"m_hi", t.m_hi},
                {"n_lo", t.n_lo},     {"n_hi", t.n_hi},
                {"source", bitwindow_to_json(t.source)},
                {"digraph", digraph_to_json(t.digraph)}};
}

tour::GridTournament tournament_from_json(const json& j) {
    tour::GridTournament t;
    t.m_lo = j.at("m_lo").get<int>();
    t.m_hi = j.at("m_hi").get<int>();
    t.n_lo = j.at("n_lo").get<int>();
    t.n_hi = j.at("n_hi").get<int>();
    t.source = bitwindow_from_json(j.at("source"));
    t.digraph = digraph_from_json(j.at("digraph"), /*oriented=*/true);
    return t;
}

json genericity_to_json(const tour::GenericityReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json row{{"n", e.n},
                 {"cond_ii", e.cond_ii},
                 {"cond_ii_truncated", e.cond_ii_truncated}};
        row["cond_i"] = e.cond_i ? json(*e.cond_i) : json(nullptr);
        row["cond_i_truncated"] = e.cond_i_truncated;
        row["witness_i"] = e.witness_i ? json(*e.witness_i) : json(nullptr);
        row["witness_ii"] = e.witness_ii ? json(*e.witness_ii) : json(nullptr);
        entries.push_back(std::move(row));
    }
    return json{{"n_bound", r.n_bound},
                {"entries", entries},
                {"overall_i", r.overall_i},
                {"overall_ii", r.overall_ii},
                {"overall", r.overall()}};
}

json columns_to_json(const tour::ColumnSets& c) {
    json out;
    out["S_v"] = c.s_v;
    for (int i = -2; i <= 2; ++i) out["C_" + std::to_string(i)] = c.at_offset(i);
    return out;
}

json shift_decision_to_json(const tour::ShiftDecision& d) {
    return json{{"equivalent", d.equivalent},
                {"window_limited", d.window_limited},
                {"shift", d.shift ? json(*d.shift) : json(nullptr)}};
}

json word_to_json(const equiv::OneSidedWord& w) {
    json prefix = json::array();
    for (auto b : w.prefix()) prefix.push_back(static_cast<int>(b));
    json tail = nullptr;
    if (w.tail()) {
        if (w.tail()->kind == equiv::OneSidedWord::Tail::Kind::Constant) {
            tail = json{{"kind", "constant"}, {"value", static_cast<int>(w.tail()->value)}};
        } else {
            json pattern = json::array();
            for (auto b : w.tail()->pattern) pattern.push_back(static_cast<int>(b));
            tail = json{{"kind", "periodic"}, {"pattern", pattern}};
        }
    }
    return json{{"prefix", prefix}, {"tail", tail}};
}

equiv::OneSidedWord word_from_json(const json& j) {
    std::vector<std::uint8_t> prefix;
    for (const auto& b : j.at("prefix")) prefix.push_back(static_cast<std::uint8_t>(b.get<int>()));
    std::optional<equiv::OneSidedWord::Tail> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
        equiv::OneSidedWord::Tail t;
        std::string kind = j.at("tail").at("kind").get<std::string>();
        if (kind == "constant") {
            t.kind = equiv::OneSidedWord::Tail::Kind::Constant;
            t.value = static_cast<std::uint8_t>(j.at("tail").at("value").get<int>());
        } else if (kind == "periodic") {
            t.kind = equiv::OneSidedWord::Tail::Kind::Periodic;
            for (const auto& b : j.at("tail").at("pattern"))
                t.pattern.push_back(static_cast<std::uint8_t>(b.get<int>()));
        } else {
            throw invalid_input("tail kind must be 'constant' or 'periodic'");
        }
        tail = std::move(t);
    }
    return equiv::OneSidedWord(std::move(prefix), std::move(tail));
}

json order_code_to_json(const linord::OrderCode& c) {
    using Kind = linord::OrderCode::Kind;
    switch (c.kind()) {
        case Kind::One: return json{{"kind", "one"}};
        case Kind::Z: return json{{"kind", "z"}};
        case Kind::Rational: return json{{"kind", "rational"}};
        case Kind::Product:
            return json{{"kind", "product"},
                        {"alpha", c.alpha().to_string()},
                        {"inner", order_code_to_json(*c.inner())}};
        case Kind::LimitSum: return json{{"kind", "limit"}, {"lambda", c.alpha().to_string()}};
        case Kind::QProduct:
            return json{{"kind", "q-product"}, {"inner", order_code_to_json(*c.inner())}};
    }
    throw invalid_input("unknown order-code kind");
}

}  // namespace vt::io
