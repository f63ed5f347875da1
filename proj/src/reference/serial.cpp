#include "aener/reference.hpp"

#include "aener/error.hpp"

namespace aener::serial {

ScoreReport score_corpus(const Corpus& gold, const Corpus& pred) {
  const auto rows = align(gold, pred);
  ScoreReport report;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold[i].spans;
    const auto& p = pred[rows[i]].spans;
    const auto s = count_by_type(g, p, MatchMode::strict);
    const auto r = count_by_type(g, p, MatchMode::relaxed);
    for (std::size_t t = 0; t < kNumEntityTypes; ++t) {
      report.strict.counts[t] += s[t];
      report.relaxed.counts[t] += r[t];
    }
  }
  return report;
}

ErrorBreakdown categorize_corpus(const Corpus& gold, const Corpus& pred) {
  const auto rows = align(gold, pred);
  ErrorBreakdown total;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    total += categorize_errors(gold[i].spans, pred[rows[i]].spans);
  }
  return total;
}

Corpus ensemble_corpus(const EnsembleInput& input) {
  const auto threshold = detail::resolve_threshold(input);
  const auto rows = detail::align_members(input);
  Corpus out;
  for (std::size_t i = 0; i < input.members.front().size(); ++i) {
    out.push_back(detail::vote_document(input, rows, threshold, i));
  }
  return out;
}

Corpus gen_gold(const GoldSpec& spec) {
  if (spec.min_spans > spec.max_spans) throw UsageError("min_spans must not exceed max_spans");
  Corpus out;
  for (std::size_t i = 0; i < spec.n_docs; ++i) out.push_back(detail::gold_document(spec, i));
  return out;
}

Corpus perturb(const Corpus& gold, const NoiseProfile& profile) {
  check(profile);
  Corpus out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    out.push_back(detail::perturb_document(gold[i], profile, i));
  }
  return out;
}

}  // namespace aener::serial
