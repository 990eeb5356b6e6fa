#include <benchmark/benchmark.h>

#include <random>

#include "vtcomb/cayley.hpp"
#include "vtcomb/order_code.hpp"
#include "vtcomb/poset.hpp"
#include "vtcomb/raag.hpp"
#include "vtcomb/suites.hpp"
#include "vtcomb/tournament.hpp"

namespace {

vt::raag::Word random_word(std::mt19937_64& rng, int generators, int len) {
    vt::raag::Word w;
    std::uniform_int_distribution<int> gen(0, generators - 1);
    for (int i = 0; i < len; ++i) w.push_back({gen(rng), rng() % 2 ? +1 : -1});
    return w;
}

void BM_NormalForm(benchmark::State& state) {
    vt::raag::CommutationGraph g{vt::SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})};
    std::mt19937_64 rng(42);
    std::vector<vt::raag::Word> words;
    for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 4, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vt::raag::normal_form(g, words[i++ % words.size()]));
    }
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(32)->Arg(128);

void BM_CayleyBallFree2(benchmark::State& state) {
    vt::raag::CommutationGraph g{vt::SimpleGraph::empty(2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(vt::cayley::cayley_ball(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CayleyBallFree2)->Arg(2)->Arg(4)->Arg(6);

void BM_TransitiveClosure(benchmark::State& state) {
    vt::raag::CommutationGraph g{vt::SimpleGraph(2, {{0, 1}})};
    auto ball = vt::cayley::cayley_ball(g, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vt::poset::transitive_closure(ball.digraph));
}
BENCHMARK(BM_TransitiveClosure)->Arg(3)->Arg(6);

void BM_TournamentBuild(benchmark::State& state) {
    auto x = vt::tour::BitWindow::from_pattern("001", 0, 3);
    int half = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(vt::tour::build_tournament(x, -half, half, -half, half));
}
BENCHMARK(BM_TournamentBuild)->Arg(3)->Arg(6)->Arg(10);

void BM_TournamentDecode(benchmark::State& state) {
    auto x = vt::tour::BitWindow::from_pattern("001", 0, 3);
    auto t = vt::tour::build_tournament(x, -3, 3, 0, 2);
    vt::tour::DecodeOptions opts;
    opts.min_length = 3;
    opts.assume_period = 3;
    for (auto _ : state) benchmark::DoNotOptimize(vt::tour::decode(t, "(0,1)", opts));
}
BENCHMARK(BM_TournamentDecode);

void BM_ZPowerCompare(benchmark::State& state) {
    auto alpha = vt::linord::Ordinal::parse("w*2 + 1");
    auto code = vt::linord::z_power_code(alpha);
    auto pool = code->enumerate(64);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = pool[i % pool.size()];
        const auto& b = pool[(i * 7 + 3) % pool.size()];
        benchmark::DoNotOptimize(code->compare(a, b));
        ++i;
    }
}
BENCHMARK(BM_ZPowerCompare);

void BM_ClosureOracle(benchmark::State& state) {
    vt::raag::CommutationGraph g{vt::SimpleGraph(3, {{0, 1}, {1, 2}})};
    for (auto _ : state)
        benchmark::DoNotOptimize(vt::suites::oracle::CommutationClosure(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosureOracle)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
