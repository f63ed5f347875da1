#pragma once

#include <cstdint>

#include "aener/types.hpp"

namespace aener {

struct GoldSpec {
  std::uint64_t seed = 0;
  std::size_t n_docs = 0;
  std::size_t min_spans = 1;
  std::size_t max_spans = 5;
};

// Deterministic synthetic gold: space-separated words from a fixed list,
// ending in " .", with token-aligned spans that never overlap each other.
// Document i is driven by derive_seed(seed, i).
Corpus gen_gold(const GoldSpec& spec);

struct NoiseProfile {
  double p_delete = 0.0;
  double p_spurious = 0.0;  // Poisson mean of inserted spans per document
  double p_jitter = 0.0;
  std::uint64_t seed = 0;
};

void check(const NoiseProfile& p);  // UsageError

// Deterministic given (profile.seed, document index). Output always passes
// validate().
Corpus perturb(const Corpus& gold, const NoiseProfile& profile);

namespace detail {
AnnotatedDocument gold_document(const GoldSpec& spec, std::size_t index);
AnnotatedDocument perturb_document(const AnnotatedDocument& doc,
                                   const NoiseProfile& profile, std::size_t index);
}  // namespace detail

// Seed for predictor `index` under a master seed.
std::uint64_t predictor_seed(std::uint64_t master, std::uint64_t index);

}  // namespace aener
