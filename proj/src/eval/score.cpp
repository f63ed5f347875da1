#include "aener/eval.hpp"

namespace aener {

EntityScore score(const MatchCounts& mc) {
  EntityScore s;
  const auto tp = static_cast<double>(mc.tp);
  s.precision = mc.tp + mc.fp == 0 ? 1.0 : tp / static_cast<double>(mc.tp + mc.fp);
  s.recall = mc.tp + mc.fn == 0 ? 1.0 : tp / static_cast<double>(mc.tp + mc.fn);
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

ScoreReport score_corpus(const Corpus& gold, const Corpus& pred) {
  const auto rows = align(gold, pred);
  const auto n = static_cast<std::ptrdiff_t>(gold.size());

  // Per-document counts first, then a fixed-order sum.
  std::vector<TypedCounts> strict(gold.size()), relaxed(gold.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const auto& g = gold[idx].spans;
    const auto& p = pred[rows[idx]].spans;
    strict[idx] = count_by_type(g, p, MatchMode::strict);
    relaxed[idx] = count_by_type(g, p, MatchMode::relaxed);
  }

  ScoreReport report;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t t = 0; t < kNumEntityTypes; ++t) {
      report.strict.counts[t] += strict[i][t];
      report.relaxed.counts[t] += relaxed[i][t];
    }
  }
  return report;
}

AgreementReport agreement(const Corpus& a, const Corpus& b) {
  const auto rows = align(a, b);
  TypedCounts pooled{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = count_by_type(a[i].spans, b[rows[i]].spans, MatchMode::strict);
    for (std::size_t t = 0; t < kNumEntityTypes; ++t) pooled[t] += c[t];
  }
  AgreementReport report;
  for (std::size_t t = 0; t < kNumEntityTypes; ++t) report.by_type[t] = score(pooled[t]).f1;
  report.overall = score(pooled[0] + pooled[1] + pooled[2]).f1;
  return report;
}

}  // namespace aener
