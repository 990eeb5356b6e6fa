#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vtcomb/cayley.hpp"
#include "vtcomb/errors.hpp"
#include "vtcomb/json_io.hpp"
#include "vtcomb/order_code.hpp"
#include "vtcomb/ordinal.hpp"
#include "vtcomb/poset.hpp"
#include "vtcomb/raag.hpp"
#include "vtcomb/suites.hpp"
#include "vtcomb/symbolic_order.hpp"
#include "vtcomb/tournament.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion =
    "vtcomb 0.1.0 (schemas: graph=1 digraph=1 ball=1 bitwindow=1 tournament=1 word=1 "
    "ordercode=1 report=1)";

json load_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw vt::invalid_input("cannot open file: " + arg);
    json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw vt::invalid_input("cannot write file: " + path);
    out << text;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw vt::invalid_input("range must look like a..b: " + s);
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

vt::tour::BitWindow window_from_flags(const std::string& bits, int lo, std::optional<int> period) {
    return vt::tour::BitWindow::from_pattern(bits, lo, period);
}

// Order type, by counting, of a finite strict total order given as
// {"n": k, "pairs": [[i,j], ...]} (i < j in the order).
vt::linord::Ordinal finite_order_type(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& p : j.at("pairs")) {
        int a = p.at(0).get<int>();
        int b = p.at(1).get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw vt::invalid_input("relation pair out of range");
        lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (lt[a][b] == lt[b][a])
                throw vt::invalid_input("relation is not a strict total order");
            for (int c = 0; c < n; ++c)
                if (c != a && c != b && lt[a][b] && lt[b][c] && !lt[a][c])
                    throw vt::invalid_input("relation is not transitive");
        }
    return vt::linord::Ordinal::from_nat(static_cast<std::uint64_t>(n));
}

struct Flags {
    std::string graph, word, w1, w2;
    std::string in, out, dot;
    std::string alpha, alpha_rel, term, a, b, a_rel, b_rel;
    std::string bits, cols, rows, tournament, vertex, suite_name;
    int radius = 0, cap = 20000, r_small = -1, bound = 6, k = 0;
    int lo = 0, col_margin = 2, row_margin = 0;
    std::optional<int> period, assume_period;
    std::size_t sample = 50, min_len = 2, ignore_prefix = 0;
    bool window_limited_mode = false;
    std::uint64_t seed = 12345;
};

int run_cli(int argc, char** argv) {
    CLI::App app{"Constructive maps between graphs, groups, orders and tournaments"};
    app.require_subcommand(0, 1);
    Flags f;
    int period_flag = INT32_MIN, assume_flag = INT32_MIN;
    bool show_version = false;
    app.add_flag("--version", show_version, "print version and schema versions");

    auto* raag_cmd = app.add_subcommand("raag", "word problem in the commutation group");
    auto* raag_nf = raag_cmd->add_subcommand("nf", "normal form of a word");
    raag_nf->add_option("--graph", f.graph, "commutation graph (JSON or file)")->required();
    raag_nf->add_option("--word", f.word, "word, e.g. 'a0 a1^-1'")->required();
    auto* raag_eq = raag_cmd->add_subcommand("eq", "decide equality of two words");
    raag_eq->add_option("--graph", f.graph)->required();
    raag_eq->add_option("--w1", f.w1)->required();
    raag_eq->add_option("--w2", f.w2)->required();

    auto* cayley_cmd = app.add_subcommand("cayley", "directed Cayley balls");
    auto* cayley_ball = cayley_cmd->add_subcommand("ball", "build a radius-r ball");
    cayley_ball->add_option("--graph", f.graph)->required();
    cayley_ball->add_option("--radius", f.radius)->required();
    cayley_ball->add_option("--cap", f.cap, "vertex cap");
    cayley_ball->add_option("--out", f.out, "ball JSON output path");
    cayley_ball->add_option("--dot", f.dot, "DOT output path");
    auto* cayley_check = cayley_cmd->add_subcommand("check", "acyclicity/grading/transitivity");
    cayley_check->add_option("--ball", f.in, "ball JSON (file or inline)")->required();
    cayley_check->add_option("--transitivity", f.r_small, "also check local transitivity at r_small");

    auto* poset_cmd = app.add_subcommand("poset", "transitive closure and recovery");
    auto* poset_close = poset_cmd->add_subcommand("close", "transitive closure of an acyclic digraph");
    poset_close->add_option("--in", f.in)->required();
    poset_close->add_option("--out", f.out);
    poset_close->add_option("--dot", f.dot);
    auto* poset_recover = poset_cmd->add_subcommand("recover", "covering arcs of a closed digraph");
    poset_recover->add_option("--in", f.in)->required();
    poset_recover->add_option("--out", f.out);
    poset_recover->add_option("--dot", f.dot);

    auto* lo_cmd = app.add_subcommand("lo", "linear-order calculus");
    auto* lo_zpow = lo_cmd->add_subcommand("zpow", "build and self-check the Z^alpha code");
    lo_zpow->add_option("--alpha", f.alpha, "ordinal notation, e.g. 'w*2 + 1'");
    lo_zpow->add_option("--alpha-rel", f.alpha_rel, "finite well-order relation JSON");
    lo_zpow->add_option("--sample-size,--sample", f.sample, "sample size");
    lo_zpow->add_option("--seed", f.seed, "recorded in the output (sampling is deterministic)");
    lo_zpow->add_option("--out", f.out, "order-code JSON output");
    auto* lo_condense = lo_cmd->add_subcommand("condense", "one or more condensation steps");
    lo_condense->add_option("--term", f.term, "e.g. 'Z^3' or 'Z^2 * Q'")->required();
    lo_condense->add_option("--steps", f.radius)->default_val(1);
    auto* lo_classify = lo_cmd->add_subcommand("classify", "vertex-transitive classification");
    lo_classify->add_option("--term", f.term)->required();
    auto* lo_ordcmp = lo_cmd->add_subcommand("ordcmp", "compare two ordinal notations");
    lo_ordcmp->add_option("--a", f.a);
    lo_ordcmp->add_option("--a-rel", f.a_rel);
    lo_ordcmp->add_option("--b", f.b);
    lo_ordcmp->add_option("--b-rel", f.b_rel);

    auto* tour_cmd = app.add_subcommand("tour", "grid tournaments");
    auto* tour_build = tour_cmd->add_subcommand("build", "build a tournament window");
    tour_build->add_option("--bits", f.bits)->required();
    tour_build->add_option("--lo", f.lo)->required();
    tour_build->add_option("--period", period_flag);
    tour_build->add_option("--cols", f.cols, "column range a..b")->required();
    tour_build->add_option("--rows", f.rows, "row range a..b")->required();
    tour_build->add_option("--out", f.out);
    tour_build->add_option("--dot", f.dot);
    auto* tour_generic = tour_cmd->add_subcommand("generic", "genericity report");
    tour_generic->add_option("--bits", f.bits)->required();
    tour_generic->add_option("--lo", f.lo)->required();
    tour_generic->add_option("--period", period_flag);
    tour_generic->add_option("--bound", f.bound);
    auto* tour_columns = tour_cmd->add_subcommand("columns", "S_v and the five columns");
    tour_columns->add_option("--tournament", f.tournament)->required();
    tour_columns->add_option("--vertex", f.vertex)->required();
    tour_columns->add_option("--col-margin", f.col_margin);
    tour_columns->add_option("--row-margin", f.row_margin);
    auto* tour_decode = tour_cmd->add_subcommand("decode", "decode the word up to shift");
    tour_decode->add_option("--tournament", f.tournament)->required();
    tour_decode->add_option("--vertex", f.vertex)->required();
    tour_decode->add_option("--min-len", f.min_len);
    tour_decode->add_option("--assume-period", assume_flag);
    tour_decode->add_option("--col-margin", f.col_margin);
    tour_decode->add_option("--row-margin", f.row_margin);
    auto* tour_phi = tour_cmd->add_subcommand("phi", "check phi(m,n)=(m,n+km)");
    tour_phi->add_option("--bits", f.bits)->required();
    tour_phi->add_option("--lo", f.lo)->required();
    tour_phi->add_option("--period", period_flag)->required();
    tour_phi->add_option("--k", f.k)->required();
    tour_phi->add_option("--cols", f.cols)->required();
    tour_phi->add_option("--rows", f.rows)->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "benchmark equivalence relations");
    auto* equiv_e0 = equiv_cmd->add_subcommand("e0", "eventual equality of one-sided words");
    equiv_e0->add_option("--a", f.a)->required();
    equiv_e0->add_option("--b", f.b)->required();
    equiv_e0->add_flag("--window-limited", f.window_limited_mode);
    equiv_e0->add_option("--ignore-prefix", f.ignore_prefix);
    auto* equiv_ez = equiv_cmd->add_subcommand("ez", "shift equivalence of two-sided words");
    equiv_ez->add_option("--a", f.a)->required();
    equiv_ez->add_option("--b", f.b)->required();

    auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
    suite_cmd->add_option("name", f.suite_name, "suite name or 'all'")->required();
    suite_cmd->add_option("--seed", f.seed);
    suite_cmd->add_option("--out", f.out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (show_version) {
        std::cout << kVersion << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 2;
    }

    if (period_flag != INT32_MIN) f.period = period_flag;
    if (assume_flag != INT32_MIN) f.assume_period = assume_flag;

    using vt::io::ball_from_json;
    using vt::io::ball_to_json;
    using vt::io::bitwindow_from_json;
    using vt::io::bitwindow_to_json;
    using vt::io::digraph_from_json;
    using vt::io::digraph_to_json;
    using vt::io::graph_from_json;

    if (raag_nf->parsed()) {
        vt::raag::CommutationGraph g(graph_from_json(load_json_arg(f.graph)));
        auto w = vt::raag::parse_word(f.word);
        auto nf = vt::raag::normal_form(g, w);
        emit(json{{"input", f.word},
                  {"normal_form", vt::raag::word_to_string(nf)},
                  {"length", nf.size()},
                  {"exponent_sum", vt::raag::exponent_sum(w)}},
             f.out);
        return 0;
    }
    if (raag_eq->parsed()) {
        vt::raag::CommutationGraph g(graph_from_json(load_json_arg(f.graph)));
        auto w1 = vt::raag::parse_word(f.w1);
        auto w2 = vt::raag::parse_word(f.w2);
        emit(json{{"equal", vt::raag::words_equal(g, w1, w2)},
                  {"nf1", vt::raag::word_to_string(vt::raag::normal_form(g, w1))},
                  {"nf2", vt::raag::word_to_string(vt::raag::normal_form(g, w2))}},
             f.out);
        return 0;
    }

    if (cayley_ball->parsed()) {
        vt::raag::CommutationGraph g(graph_from_json(load_json_arg(f.graph)));
        auto ball = vt::cayley::cayley_ball(g, f.radius, f.cap);
        if (!f.out.empty()) emit(ball_to_json(ball), f.out);
        if (!f.dot.empty()) write_text(f.dot, ball.digraph.to_dot("cayley_ball"));
        emit(json{{"vertices", ball.digraph.vertex_count()},
                  {"arcs", ball.digraph.arc_count()},
                  {"radius", ball.radius}},
             "");
        return 0;
    }
    if (cayley_check->parsed()) {
        auto ball = ball_from_json(load_json_arg(f.in));
        json out{{"acyclic", vt::cayley::check_acyclic(ball)},
                 {"graded", vt::cayley::check_grading(ball)}};
        if (f.r_small >= 0)
            out["locally_transitive"] = vt::cayley::check_local_transitivity(ball, f.r_small);
        emit(out, f.out);
        return 0;
    }

    if (poset_close->parsed()) {
        auto d = digraph_from_json(load_json_arg(f.in));
        auto closed = vt::poset::transitive_closure(d);
        emit(digraph_to_json(closed.digraph()), f.out);
        if (!f.dot.empty()) write_text(f.dot, closed.digraph().to_dot("closure"));
        return 0;
    }
    if (poset_recover->parsed()) {
        vt::poset::ClosedDigraph closed(digraph_from_json(load_json_arg(f.in), true));
        auto rec = vt::poset::recover_generator_arcs(closed);
        emit(digraph_to_json(rec), f.out);
        if (!f.dot.empty()) write_text(f.dot, rec.to_dot("recovered"));
        return 0;
    }

    if (lo_zpow->parsed()) {
        vt::linord::Ordinal alpha;
        if (!f.alpha.empty())
            alpha = vt::linord::Ordinal::parse(f.alpha);
        else if (!f.alpha_rel.empty())
            alpha = finite_order_type(load_json_arg(f.alpha_rel));
        else
            throw vt::invalid_input("need --alpha or --alpha-rel");
        auto code = vt::linord::z_power_code(alpha);
        auto check = vt::linord::code_compare_with_symbolic(alpha, *code, f.sample);
        json summary{{"alpha", alpha.to_string()},
                     {"sample_size", f.sample},
                     {"seed", f.seed},
                     {"self_check", check.ok},
                     {"detail", check.detail}};
        if (!alpha.is_zero())
            summary["two_sided_discrete"] =
                vt::linord::sample_two_sided_discrete(*code, std::min<std::size_t>(f.sample, 100));
        if (!f.out.empty())
            emit(json{{"alpha", alpha.to_string()},
                      {"code", vt::io::order_code_to_json(*code)}},
                 f.out);
        emit(summary, "");
        return 0;
    }
    if (lo_condense->parsed()) {
        auto term = vt::linord::SymbolicOrder::parse(f.term);
        json steps = json::array();
        steps.push_back(term.to_string());
        for (int i = 0; i < std::max(1, f.radius); ++i) {
            term = vt::linord::condense(term);
            steps.push_back(term.to_string());
        }
        emit(json{{"steps", steps}}, f.out);
        return 0;
    }
    if (lo_classify->parsed()) {
        auto result = vt::linord::classify_vt(vt::linord::SymbolicOrder::parse(f.term));
        if (result.vertex_transitive)
            emit(json{{"vertex_transitive", true},
                      {"alpha", result.alpha.to_string()},
                      {"tail", result.tail_q ? "Q" : "One"}},
                 f.out);
        else
            emit(json{{"vertex_transitive", false}, {"reason", result.reason}}, f.out);
        return 0;
    }
    if (lo_ordcmp->parsed()) {
        auto pick = [&](const std::string& text, const std::string& rel) {
            if (!text.empty()) return vt::linord::Ordinal::parse(text);
            if (!rel.empty()) return finite_order_type(load_json_arg(rel));
            throw vt::invalid_input("need a notation or a relation file for both sides");
        };
        auto a = pick(f.a, f.a_rel);
        auto b = pick(f.b, f.b_rel);
        auto c = vt::linord::ord_compare(a, b);
        emit(json{{"a", a.to_string()},
                  {"b", b.to_string()},
                  {"order", c == vt::linord::Cmp::lt ? "lt" : c == vt::linord::Cmp::eq ? "eq" : "gt"},
                  {"isomorphic", vt::linord::ordinal_iso(a, b)}},
             f.out);
        return 0;
    }

    if (tour_build->parsed()) {
        auto x = window_from_flags(f.bits, f.lo, f.period);
        auto [ml, mh] = parse_range(f.cols);
        auto [nl, nh] = parse_range(f.rows);
        auto t = vt::tour::build_tournament(x, ml, mh, nl, nh);
        if (!f.out.empty()) emit(vt::io::tournament_to_json(t), f.out);
        if (!f.dot.empty()) write_text(f.dot, t.digraph.to_dot("tournament"));
        emit(json{{"vertices", t.digraph.vertex_count()}, {"arcs", t.digraph.arc_count()}}, "");
        return 0;
    }
    if (tour_generic->parsed()) {
        auto x = window_from_flags(f.bits, f.lo, f.period);
        emit(vt::io::genericity_to_json(vt::tour::check_genericity(x, f.bound)), f.out);
        return 0;
    }
    if (tour_columns->parsed()) {
        auto t = vt::io::tournament_from_json(load_json_arg(f.tournament));
        auto cols = vt::tour::identify_columns(t, f.vertex, f.col_margin, f.row_margin);
        emit(vt::io::columns_to_json(cols), f.out);
        return 0;
    }
    if (tour_decode->parsed()) {
        auto t = vt::io::tournament_from_json(load_json_arg(f.tournament));
        vt::tour::DecodeOptions opts;
        opts.min_length = f.min_len;
        opts.assume_period = f.assume_period;
        auto cls = vt::tour::decode(t, f.vertex, opts, f.col_margin, f.row_margin);
        emit(bitwindow_to_json(cls.representative), f.out);
        return 0;
    }
    if (tour_phi->parsed()) {
        auto x = window_from_flags(f.bits, f.lo, f.period);
        auto [ml, mh] = parse_range(f.cols);
        auto [nl, nh] = parse_range(f.rows);
        emit(json{{"holds", vt::tour::phi_isomorphism_check(x, f.k, ml, mh, nl, nh)}}, f.out);
        return 0;
    }

    if (equiv_e0->parsed()) {
        auto a = vt::io::word_from_json(load_json_arg(f.a));
        auto b = vt::io::word_from_json(load_json_arg(f.b));
        vt::equiv::E0Decision d = f.window_limited_mode
                                      ? vt::equiv::e0_window_limited(a, b, f.ignore_prefix)
                                      : vt::equiv::e0_equivalent(a, b);
        emit(json{{"equivalent", d.equivalent}, {"window_limited", d.window_limited}}, f.out);
        return 0;
    }
    if (equiv_ez->parsed()) {
        auto a = bitwindow_from_json(load_json_arg(f.a));
        auto b = bitwindow_from_json(load_json_arg(f.b));
        emit(vt::io::shift_decision_to_json(vt::equiv::e_z_equivalent(a, b)), f.out);
        return 0;
    }

    if (suite_cmd->parsed()) {
        if (f.suite_name == "all") {
            auto rep = vt::suites::run_all(f.seed);
            std::string text = rep.render();
            std::cout << text;
            if (!f.out.empty()) write_text(f.out, text);
            return rep.all_passed() ? 0 : 1;
        }
        auto res = vt::suites::run_by_name(f.suite_name, f.seed);
        vt::suites::SuiteReport rep;
        rep.seed = f.seed;
        rep.results.push_back(res);
        std::string text = rep.render();
        std::cout << text;
        if (!f.out.empty()) write_text(f.out, text);
        return res.passed ? 0 : 1;
    }

    std::cout << app.help();
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const vt::Error& e) {
        std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cout << json{{"error", "bad-json"}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
