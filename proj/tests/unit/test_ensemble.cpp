#include <doctest.h>

#include <algorithm>

#include "aener/corpus.hpp"
#include "aener/ensemble.hpp"
#include "aener/error.hpp"
#include "aener/synth.hpp"
#include "aener/tagging.hpp"
#include "support/oracles.hpp"

using namespace aener;

namespace {

EntitySpan sp(std::int64_t s, std::int64_t e, EntityType t) { return {s, e, t, ""}; }

SpanSet votes(const std::vector<SpanSet>& sets, std::size_t threshold) {
  return vote_spans(std::span<const SpanSet>(sets), threshold);
}

SpanSet token_votes(std::string_view text, const std::vector<SpanSet>& sets, std::size_t threshold) {
  return vote_tokens(text, std::span<const SpanSet>(sets), threshold);
}

bool subset(const SpanSet& a, const SpanSet& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const EntitySpan& s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

// Random spans aligned to the tokens of `text`.
SpanSet random_token_spans(SplitMix64& rng, const std::vector<Token>& toks) {
  SpanSet out;
  const auto n = rng.below(4);
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto a = rng.below(toks.size());
    const auto b = std::min<std::uint64_t>(toks.size() - 1, a + rng.below(3));
    EntitySpan s{toks[a].start, toks[b].end, kEntityTypes[rng.below(3)], ""};
    bool clash = false;
    for (const auto& o : out) clash = clash || (o.type == s.type && o.overlaps(s));
    if (!clash) out.push_back(s);
  }
  normalize(out);
  return out;
}

}  // namespace

TEST_CASE("vote_spans") {
  const SpanSet same = {sp(0, 5, EntityType::ae)};
  CHECK(votes({same, same, same}, 2) == same);

  CHECK(votes({{sp(0, 5, EntityType::ae)},
               {sp(0, 5, EntityType::ae), sp(7, 9, EntityType::shot)},
               {sp(7, 9, EntityType::shot)}},
              2) == SpanSet{sp(0, 5, EntityType::ae), sp(7, 9, EntityType::shot)});

  CHECK(votes({{sp(0, 5, EntityType::ae)}, {sp(0, 4, EntityType::ae)}, {sp(0, 5, EntityType::ae)}}, 2) ==
        SpanSet{sp(0, 5, EntityType::ae)});

  // A predictor listing a triple twice still casts one vote.
  CHECK(votes({{sp(0, 5, EntityType::ae), sp(0, 5, EntityType::ae)}, {}, {}}, 2).empty());
}

TEST_CASE("vote_tokens") {
  const std::string text = "aa bb cc";
  CHECK(token_votes(text, {{}, {}, {}}, 2).empty());

  CHECK(token_votes(text, {{sp(0, 8, EntityType::ae)}, {sp(0, 5, EntityType::ae)}, {sp(0, 8, EntityType::ae)}},
                    2) == SpanSet{sp(0, 8, EntityType::ae)});

  CHECK(token_votes(text, {{sp(0, 2, EntityType::ae)}, {sp(6, 8, EntityType::ae)}, {}}, 2).empty());

  // Partial token overlap counts as covering the token.
  const auto out = token_votes(text, {{sp(1, 4, EntityType::ae)}, {sp(3, 5, EntityType::ae)}}, 2);
  CHECK(out == SpanSet{sp(3, 5, EntityType::ae)});
  REQUIRE(out.size() == 1);
  CHECK(out[0].surface == "bb");

  // Types are voted independently; the output may overlap across types.
  CHECK(token_votes(text, {{sp(0, 5, EntityType::ae), sp(3, 8, EntityType::vaccine)},
                           {sp(0, 5, EntityType::ae), sp(3, 8, EntityType::vaccine)}},
                    2) == SpanSet{sp(0, 5, EntityType::ae), sp(3, 8, EntityType::vaccine)});
}

TEST_CASE("vote properties over random predictions") {
  SplitMix64 rng(2024);
  const std::string text = "one two three four five six seven eight nine ten";
  const auto toks = tokenize(text);
  for (int trial = 0; trial < 400; ++trial) {
    const auto k = 1 + rng.below(5);
    std::vector<SpanSet> preds;
    for (std::uint64_t m = 0; m < k; ++m) preds.push_back(random_token_spans(rng, toks));

    for (std::size_t t = 1; t <= k; ++t) {
      const auto span_out = votes(preds, t);
      // Agrees with direct counting, hence containment.
      CHECK(oracle::triples(span_out) == oracle::majority(preds, t));
      if (t < k) {
        CHECK(subset(votes(preds, t + 1), span_out));
        const auto tok_lo = token_votes(text, preds, t);
        const auto tok_hi = token_votes(text, preds, t + 1);
        // Every token covered at the higher threshold is covered at the lower one.
        for (const auto& s : tok_hi) {
          CHECK(std::any_of(tok_lo.begin(), tok_lo.end(), [&](const EntitySpan& o) {
            return o.type == s.type && o.start <= s.start && s.end <= o.end;
          }));
        }
      }
      auto shuffled = preds;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(votes(shuffled, t) == span_out);
      CHECK(token_votes(text, shuffled, t) == token_votes(text, preds, t));
    }

    const std::vector<SpanSet> same(k, preds[0]);
    CHECK(votes(same, k) == preds[0]);
    CHECK(votes(same, 1) == preds[0]);
    CHECK(votes({preds[0]}, 1) == preds[0]);
  }
}

TEST_CASE("vote_tokens unanimity for non-adjacent token-aligned spans") {
  SplitMix64 rng(7);
  const std::string text = "a b c d e f g h i j k l";
  const auto toks = tokenize(text);
  for (int trial = 0; trial < 200; ++trial) {
    SpanSet s;
    for (const auto t : kEntityTypes) {
      std::size_t i = rng.below(3);
      while (i < toks.size()) {
        const auto j = std::min(toks.size() - 1, i + rng.below(2));
        if (rng.below(2)) s.push_back({toks[i].start, toks[j].end, t, ""});
        i = j + 2 + rng.below(2);
      }
    }
    normalize(s);
    CHECK(token_votes(text, {s, s, s}, 2) == s);
  }
}

TEST_CASE("ensemble_corpus") {
  const auto gold = gen_gold({1, 20, 1, 4});
  const auto out = ensemble_corpus({{gold, gold, gold}});
  REQUIRE(out.size() == gold.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].doc_id == gold[i].doc_id);
    CHECK(out[i].spans == gold[i].spans);
  }

  const auto tok = ensemble_corpus({{gold, gold, gold}, VoteMode::token, 2});
  for (const auto& d : tok) CHECK(validate(d).empty());

  auto missing = gold;
  missing.erase(missing.begin() + 3);
  try {
    ensemble_corpus({{gold, gold, missing}});
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(gold[3].doc_id) != std::string::npos);
  }

  auto edited = gold;
  edited[5].text += " extra";
  edited[5].spans.clear();
  CHECK_THROWS_AS(ensemble_corpus({{gold, edited}}), DataError);

  CHECK_THROWS_AS(ensemble_corpus({{gold}}), UsageError);
  CHECK_THROWS_AS(ensemble_corpus({{gold, gold}, VoteMode::span, 3}), UsageError);
  CHECK(detail::resolve_threshold({{gold, gold, gold}}) == 2);
  CHECK(detail::resolve_threshold({{gold, gold, gold, gold}}) == 3);
  CHECK(parse_vote_mode("token") == VoteMode::token);
  CHECK_THROWS_AS(parse_vote_mode("tokens"), UsageError);
}

TEST_CASE("ensemble_corpus accepts members in different order") {
  const auto gold = gen_gold({2, 10, 1, 3});
  auto reversed = gold;
  std::reverse(reversed.begin(), reversed.end());
  const auto out = ensemble_corpus({{gold, reversed, gold}});
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].doc_id == gold[i].doc_id);
    CHECK(out[i].spans == gold[i].spans);
  }
}
