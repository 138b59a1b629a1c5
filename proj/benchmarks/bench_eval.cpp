#include <benchmark/benchmark.h>

#include "teamlogic/teamlogic.hpp"

using namespace teamlogic;

namespace {

void BM_AtomOnWitness(benchmark::State& state, EvalMode mode) {
  const LowerBoundWitness w = lower_bound_witness(static_cast<unsigned>(state.range(0)));
  EvalConfig cfg;
  cfg.mode = mode;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(w.model, w.team, w.atom, cfg));
  }
  state.counters["team"] = static_cast<double>(w.team.size());
}

// A disjunction that fails forces the reference evaluator through every split.
void BM_FailingSplit(benchmark::State& state, EvalMode mode) {
  const LowerBoundWitness w = lower_bound_witness(static_cast<unsigned>(state.range(0)));
  const Formula f = parse_formula("(p1 & q1) | (p2 & q2)");
  EvalConfig cfg;
  cfg.mode = mode;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(w.model, w.team, f, cfg));
  }
}

void BM_AllTeams(benchmark::State& state, EvalMode mode) {
  const auto models = enumerate_models(2, {"p"});
  const Formula f = parse_formula("dia (p |! box ~p) | nab dia p");
  EvalConfig cfg;
  cfg.mode = mode;
  for (auto _ : state) {
    std::size_t n = 0;
    for (const KripkeModel& k : models) n += satisfying_teams(k, f, cfg).size();
    benchmark::DoNotOptimize(n);
  }
}

void BM_Hintikka(benchmark::State& state) {
  const KripkeModel k({"p", "q"}, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "d"}},
                      {{"p", {"a", "c"}}, {"q", {"b", "c"}}});
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    HintikkaBuilder hb(k);
    for (std::size_t w = 0; w < k.size(); ++w) benchmark::DoNotOptimize(hb.chi(w, depth).node_count());
  }
}

void BM_Psi(benchmark::State& state) {
  const KripkeModel k({"p"}, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}}, {{"p", {"b"}}});
  const auto depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi(k, k.all(), depth).node_count());
}

void BM_StrategySearch(benchmark::State& state) {
  const LowerBoundWitness w = lower_bound_witness(2);
  const Formula f = parse_formula("(p1 | ~p1) & nab (p1 & p2) & nab (~q1 & q2) & (q2 | nab q1)");
  for (auto _ : state) benchmark::DoNotOptimize(find_strategy(w.model, w.team, f).has_value());
}

}  // namespace

BENCHMARK_CAPTURE(BM_AtomOnWitness, optimized, EvalMode::Optimized)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_AtomOnWitness, reference, EvalMode::Reference)->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_FailingSplit, optimized, EvalMode::Optimized)->DenseRange(2, 3);
BENCHMARK_CAPTURE(BM_FailingSplit, reference, EvalMode::Reference)->DenseRange(2, 3);
BENCHMARK_CAPTURE(BM_AllTeams, optimized, EvalMode::Optimized);
BENCHMARK_CAPTURE(BM_AllTeams, reference, EvalMode::Reference);
BENCHMARK(BM_Hintikka)->DenseRange(0, 4);
BENCHMARK(BM_Psi)->DenseRange(0, 3);
BENCHMARK(BM_StrategySearch);
BENCHMARK_MAIN();
