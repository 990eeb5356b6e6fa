#ifndef VTCOMB_JSON_IO_HPP
#define VTCOMB_JSON_IO_HPP

#include <json.hpp>

#include "vtcomb/cayley.hpp"
#include "vtcomb/digraph.hpp"
#include "vtcomb/equiv.hpp"
#include "vtcomb/order_code.hpp"
#include "vtcomb/simple_graph.hpp"
#include "vtcomb/tournament.hpp"

namespace vt::io {

using nlohmann::json;

// Digraphs: {"vertices": ["l1", ...], "arcs": [["l1","l2"], ...]}.
json digraph_to_json(const LabeledDigraph& d);
LabeledDigraph digraph_from_json(const json& j, bool oriented = false);

// Simple graphs: {"n": 3, "edges": [[0,1], ...]}.
json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

json ball_to_json(const cayley::CayleyBall& b);
cayley::CayleyBall ball_from_json(const json& j);

// Bit windows: {"lo": .., "hi": .., "bits": [..], "period": null|p}.
json bitwindow_to_json(const tour::BitWindow& w);
tour::BitWindow bitwindow_from_json(const json& j);

json tournament_to_json(const tour::GridTournament& t);
tour::GridTournament tournament_from_json(const json& j);

json genericity_to_json(const tour::GenericityReport& r);
json columns_to_json(const tour::ColumnSets& c);
json shift_decision_to_json(const tour::ShiftDecision& d);

// One-sided words: {"prefix":[..], "tail": null | {"kind":"constant","value":b}
//                   | {"kind":"periodic","pattern":[..]}}.
json word_to_json(const equiv::OneSidedWord& w);
equiv::OneSidedWord word_from_json(const json& j);

// Order codes as a {kind, parameters} tree.
json order_code_to_json(const linord::OrderCode& c);

}  // namespace vt::io

#endif
