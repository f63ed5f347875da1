// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "aener/ensemble.hpp"
#include "aener/eval.hpp"
#include "aener/reference.hpp"
#include "aener/synth.hpp"

namespace {

using namespace aener;

struct Workload {
  Corpus gold;
  std::vector<Corpus> preds;
};

const Workload& workload(std::size_t n_docs) {
  static std::map<std::size_t, Workload> cache;
  auto [it, fresh] = cache.try_emplace(n_docs);
  if (fresh) {
    it->second.gold = gen_gold({1, n_docs, 1, 8});
    for (std::uint64_t p = 0; p < 3; ++p) {
      it->second.preds.push_back(perturb(it->second.gold, {0.15, 0.15, 0.1, predictor_seed(1, p)}));
    }
  }
  return it->second;
}

template <bool Parallel>
void BM_score_corpus(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? score_corpus(w.gold, w.preds[0]) : serial::score_corpus(w.gold, w.preds[0]);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_categorize_corpus(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? categorize_corpus(w.gold, w.preds[0]) : serial::categorize_corpus(w.gold, w.preds[0]);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel, VoteMode Mode>
void BM_ensemble_corpus(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  const EnsembleInput input{w.preds, Mode, 2};
  for (auto _ : state) {
    auto r = Parallel ? ensemble_corpus(input) : serial::ensemble_corpus(input);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_gen_gold(benchmark::State& state) {
  const GoldSpec spec{1, static_cast<std::size_t>(state.range(0)), 1, 8};
  for (auto _ : state) {
    auto r = Parallel ? gen_gold(spec) : serial::gen_gold(spec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_perturb(benchmark::State& state) {
  const auto& w = workload(static_cast<std::size_t>(state.range(0)));
  const NoiseProfile profile{0.15, 0.15, 0.1, 9};
  for (auto _ : state) {
    auto r = Parallel ? perturb(w.gold, profile) : serial::perturb(w.gold, profile);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

#define AENER_PAIR(name)                                                        \
  BENCHMARK(name<false>)->Name(#name "/serial")->Arg(1000)->Arg(10000);        \
  BENCHMARK(name<true>)->Name(#name "/parallel")->Arg(1000)->Arg(10000)

AENER_PAIR(BM_score_corpus);
AENER_PAIR(BM_categorize_corpus);
AENER_PAIR(BM_gen_gold);
AENER_PAIR(BM_perturb);
BENCHMARK(BM_ensemble_corpus<false, VoteMode::span>)->Name("BM_ensemble_span/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_ensemble_corpus<true, VoteMode::span>)->Name("BM_ensemble_span/parallel")->Arg(1000)->Arg(10000);
BENCHMARK(BM_ensemble_corpus<false, VoteMode::token>)->Name("BM_ensemble_token/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_ensemble_corpus<true, VoteMode::token>)->Name("BM_ensemble_token/parallel")->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
