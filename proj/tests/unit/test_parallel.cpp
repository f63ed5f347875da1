#include <doctest.h>

#include <omp.h>

#include <sstream>

#include "aener/corpus.hpp"
#include "aener/ensemble.hpp"
#include "aener/eval.hpp"
#include "aener/reference.hpp"
#include "aener/synth.hpp"

using namespace aener;

namespace {

std::string serialize(const Corpus& c) {
  std::ostringstream out;
  write_corpus(c, out);
  return out.str();
}

bool same(const ScoreReport& a, const ScoreReport& b) {
  return a.strict.counts == b.strict.counts && a.relaxed.counts == b.relaxed.counts;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference at every thread count") {
  const GoldSpec spec{21, 300, 0, 6};
  const auto gold_ref = serial::gen_gold(spec);
  std::vector<NoiseProfile> profiles;
  std::vector<Corpus> preds_ref;
  for (std::uint64_t p = 0; p < 3; ++p) {
    profiles.push_back({0.2, 0.5, 0.2, predictor_seed(21, p)});
    preds_ref.push_back(serial::perturb(gold_ref, profiles.back()));
  }
  const auto score_ref = serial::score_corpus(gold_ref, preds_ref[0]);
  const auto errors_ref = serial::categorize_corpus(gold_ref, preds_ref[0]);
  const auto span_ref = serial::ensemble_corpus({preds_ref});
  const auto token_ref = serial::ensemble_corpus({preds_ref, VoteMode::token, 2});

  for (int threads : {1, 2, 3, 8}) {
    CAPTURE(threads);
    omp_set_num_threads(threads);
    const auto gold = gen_gold(spec);
    CHECK(serialize(gold) == serialize(gold_ref));
    std::vector<Corpus> preds;
    for (std::size_t p = 0; p < 3; ++p) {
      preds.push_back(perturb(gold, profiles[p]));
      CHECK(serialize(preds.back()) == serialize(preds_ref[p]));
    }
    CHECK(same(score_corpus(gold, preds[0]), score_ref));
    CHECK(categorize_corpus(gold, preds[0]) == errors_ref);
    CHECK(serialize(ensemble_corpus({preds})) == serialize(span_ref));
    CHECK(serialize(ensemble_corpus({preds, VoteMode::token, 2})) == serialize(token_ref));
  }
}
