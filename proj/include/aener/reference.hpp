#pragma once

// Single-threaded versions of the corpus-level kernels. They share the
// per-document primitives with the parallel versions and exist so tests and
// benchmarks can compare the two.

#include "aener/ensemble.hpp"
#include "aener/eval.hpp"
#include "aener/synth.hpp"

namespace aener::serial {

ScoreReport score_corpus(const Corpus& gold, const Corpus& pred);
ErrorBreakdown categorize_corpus(const Corpus& gold, const Corpus& pred);
Corpus ensemble_corpus(const EnsembleInput& input);
Corpus gen_gold(const GoldSpec& spec);
Corpus perturb(const Corpus& gold, const NoiseProfile& profile);

}  // namespace aener::serial
