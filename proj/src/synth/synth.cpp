#include "aener/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/rng.hpp"
#include "aener/tagging.hpp"
#include "aener/unicode.hpp"

namespace aener {

namespace {

constexpr std::string_view kVaccines[] = {
    "moderna vaccine", "pfizer vaccine", "covid vaccine", "janssen vaccine",
    "astrazeneca",     "novavax",        "pfizer",        "moderna"};
constexpr std::string_view kShots[] = {"first dose",   "second dose", "booster shot",
                                       "1st dose",     "2nd dose",    "third shot",
                                       "second shot"};
constexpr std::string_view kAes[] = {
    "sore arm", "fever",     "headache",  "chills", "fatigue",
    "nausea",   "muscle pain", "swollen lymph nodes", "dizziness", "rash",
    "body aches", "tired"};
constexpr std::string_view kFiller[] = {
    "my", "i",     "got",  "the",   "after", "and",     "was",  "very",
    "day", "next", "felt", "had",   "a",     "so",      "then", "today",
    "this", "it",  "with", "of",    "at",    "night",   "morning", "really",
    "bit",  "since", "for", "two",  "days",  "but",     "now",  "better"};

template <std::size_t N>
std::string_view pick(SplitMix64& rng, const std::string_view (&words)[N]) {
  return words[rng.below(N)];
}

std::size_t uniform_between(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

std::size_t poisson(SplitMix64& rng, double mean) {
  if (mean <= 0.0) return 0;
  const double limit = std::exp(-mean);
  std::size_t k = 0;
  double p = rng.uniform();
  while (p > limit) {
    ++k;
    p *= rng.uniform();
  }
  return k;
}

// Token-index interval [first, last] plus type.
struct TokenSpan {
  std::size_t first, last;
  EntityType type;
};

bool collides(const std::vector<TokenSpan>& spans, const TokenSpan& s, std::size_t skip) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (i == skip || spans[i].type != s.type) continue;
    if (s.first <= spans[i].last && spans[i].first <= s.last) return true;
  }
  return false;
}

}  // namespace

void check(const NoiseProfile& p) {
  auto prob = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw UsageError(std::string(name) + " must be in [0,1]");
  };
  prob(p.p_delete, "p_delete");
  prob(p.p_jitter, "p_jitter");
  if (!(p.p_spurious >= 0.0) || !std::isfinite(p.p_spurious)) {
    throw UsageError("p_spurious must be a finite value >= 0");
  }
}

std::uint64_t predictor_seed(std::uint64_t master, std::uint64_t index) {
  return derive_seed(master, index);
}

namespace detail {

AnnotatedDocument gold_document(const GoldSpec& spec, std::size_t index) {
  SplitMix64 rng(derive_seed(spec.seed, index));
  const std::size_t n_spans = uniform_between(rng, spec.min_spans, spec.max_spans);

  AnnotatedDocument doc;
  doc.doc_id = "synth:" + std::to_string(index);
  doc.source = Source::synthetic;

  auto append_word = [&](std::string_view w) {
    if (!doc.text.empty()) doc.text.push_back(' ');
    doc.text += w;
  };
  auto filler = [&](std::size_t lo, std::size_t hi) {
    const auto n = uniform_between(rng, lo, hi);
    for (std::size_t i = 0; i < n; ++i) append_word(pick(rng, kFiller));
  };

  filler(0, 3);
  for (std::size_t s = 0; s < n_spans; ++s) {
    const auto type = kEntityTypes[rng.below(kNumEntityTypes)];
    std::string_view phrase;
    switch (type) {
      case EntityType::vaccine: phrase = pick(rng, kVaccines); break;
      case EntityType::shot: phrase = pick(rng, kShots); break;
      case EntityType::ae: phrase = pick(rng, kAes); break;
    }
    append_word(phrase);
    // Text is ASCII, so byte offsets equal scalar-value offsets.
    const auto end = static_cast<std::int64_t>(doc.text.size());
    const auto start = end - static_cast<std::int64_t>(phrase.size());
    doc.spans.push_back(EntitySpan{start, end, type, std::string(phrase)});
    filler(1, 4);
  }
  append_word(".");
  return doc;
}

AnnotatedDocument perturb_document(const AnnotatedDocument& doc,
                                   const NoiseProfile& profile, std::size_t index) {
  SplitMix64 rng(derive_seed(profile.seed, index));
  const std::u32string text = unicode::decode(doc.text);
  const auto tokens = tokenize(std::u32string_view(text));
  const std::size_t ntok = tokens.size();

  SpanSet gold = doc.spans;
  normalize(gold);

  std::vector<TokenSpan> spans;
  for (const auto& g : gold) {
    if (rng.uniform() < profile.p_delete) continue;
    auto first = std::partition_point(tokens.begin(), tokens.end(),
                                      [&](const Token& t) { return t.end <= g.start; });
    auto last = first;
    while (last != tokens.end() && last->start < g.end) ++last;
    if (first == last) continue;
    spans.push_back({static_cast<std::size_t>(first - tokens.begin()),
                     static_cast<std::size_t>(last - tokens.begin()) - 1, g.type});
  }

  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (rng.uniform() >= profile.p_jitter) continue;
    // Four one-token moves; try them starting from a random one.
    const auto offset = rng.below(4);
    for (std::size_t k = 0; k < 4; ++k) {
      TokenSpan moved = spans[i];
      switch ((offset + k) % 4) {
        case 0: if (moved.first == 0) continue; --moved.first; break;
        case 1: if (moved.first == moved.last) continue; ++moved.first; break;
        case 2: if (moved.last + 1 >= ntok) continue; ++moved.last; break;
        case 3: if (moved.first == moved.last) continue; --moved.last; break;
      }
      if (collides(spans, moved, i)) continue;
      spans[i] = moved;
      break;
    }
  }

  if (ntok > 0) {
    const auto extra = poisson(rng, profile.p_spurious);
    for (std::size_t e = 0; e < extra; ++e) {
      for (int attempt = 0; attempt < 10; ++attempt) {
        TokenSpan s;
        s.type = kEntityTypes[rng.below(kNumEntityTypes)];
        s.first = static_cast<std::size_t>(rng.below(ntok));
        s.last = std::min(ntok - 1, s.first + static_cast<std::size_t>(rng.below(3)));
        if (collides(spans, s, spans.size())) continue;
        spans.push_back(s);
        break;
      }
    }
  }

  AnnotatedDocument out;
  out.doc_id = doc.doc_id;
  out.source = doc.source;
  out.text = doc.text;
  out.meta = doc.meta;
  for (const auto& s : spans) {
    out.spans.push_back(make_span(text, tokens[s.first].start, tokens[s.last].end, s.type));
  }
  normalize(out.spans);
  return out;
}

}  // namespace detail

Corpus gen_gold(const GoldSpec& spec) {
  if (spec.min_spans > spec.max_spans) throw UsageError("min_spans must not exceed max_spans");
  const auto n = static_cast<std::ptrdiff_t>(spec.n_docs);
  Corpus out(spec.n_docs);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = detail::gold_document(spec, static_cast<std::size_t>(i));
  }
  return out;
}

Corpus perturb(const Corpus& gold, const NoiseProfile& profile) {
  check(profile);
  const auto n = static_cast<std::ptrdiff_t>(gold.size());
  Corpus out(gold.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = detail::perturb_document(gold[idx], profile, idx);
  }
  return out;
}

}  // namespace aener
