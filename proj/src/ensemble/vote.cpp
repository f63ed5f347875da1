#include <algorithm>
#include <map>

#include "aener/corpus.hpp"
#include "aener/ensemble.hpp"
#include "aener/error.hpp"
#include "aener/eval.hpp"
#include "aener/tagging.hpp"
#include "aener/unicode.hpp"

namespace aener {

std::string_view to_string(VoteMode m) { return m == VoteMode::span ? "span" : "token"; }

VoteMode parse_vote_mode(std::string_view s) {
  if (s == "span") return VoteMode::span;
  if (s == "token") return VoteMode::token;
  throw UsageError("unknown ensemble mode '" + std::string(s) + "' (span or token)");
}

SpanSet vote_spans(std::span<const SpanSet> predictions, std::size_t threshold) {
  std::map<EntitySpan, std::size_t> votes;
  for (const auto& set : predictions) {
    SpanSet unique = set;
    normalize(unique);
    for (auto& s : unique) {
      auto [it, inserted] = votes.try_emplace(std::move(s), 0);
      ++it->second;
    }
  }
  SpanSet out;
  for (const auto& [span, n] : votes) {
    if (n >= threshold) out.push_back(span);
  }
  return out;
}

SpanSet vote_tokens(std::string_view text, std::span<const SpanSet> predictions,
                    std::size_t threshold) {
  const std::u32string u = unicode::decode(text);
  const auto tokens = tokenize(std::u32string_view(u));
  const std::size_t n = tokens.size();
  SpanSet out;
  if (n == 0) return out;

  std::vector<std::size_t> votes(n);
  std::vector<char> covered(n);
  for (EntityType t : kEntityTypes) {
    std::fill(votes.begin(), votes.end(), 0);
    for (const auto& set : predictions) {
      std::fill(covered.begin(), covered.end(), 0);
      for (const auto& s : set) {
        if (s.type != t) continue;
        auto it = std::partition_point(tokens.begin(), tokens.end(),
                                       [&](const Token& tok) { return tok.end <= s.start; });
        for (; it != tokens.end() && it->start < s.end; ++it) {
          covered[static_cast<std::size_t>(it - tokens.begin())] = 1;
        }
      }
      for (std::size_t i = 0; i < n; ++i) votes[i] += covered[i];
    }
    for (std::size_t i = 0; i < n;) {
      if (votes[i] < threshold) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < n && votes[j + 1] >= threshold) ++j;
      out.push_back(make_span(u, tokens[i].start, tokens[j].end, t));
      i = j + 1;
    }
  }
  normalize(out);
  return out;
}

namespace detail {

std::size_t resolve_threshold(const EnsembleInput& input) {
  const std::size_t k = input.members.size();
  if (k < 2) throw UsageError("ensemble needs at least 2 prediction sets, got " + std::to_string(k));
  const std::size_t t = input.threshold == 0 ? majority_threshold(k) : input.threshold;
  if (t < 1 || t > k) {
    throw UsageError("threshold " + std::to_string(t) + " outside 1.." + std::to_string(k));
  }
  return t;
}

std::vector<std::vector<std::size_t>> align_members(const EnsembleInput& input) {
  std::vector<std::vector<std::size_t>> rows;
  const auto& base = input.members.front();
  for (const auto& member : input.members) rows.push_back(align(base, member));
  return rows;
}

AnnotatedDocument vote_document(const EnsembleInput& input,
                                const std::vector<std::vector<std::size_t>>& rows,
                                std::size_t threshold, std::size_t i) {
  const auto& base = input.members.front()[i];
  std::vector<SpanSet> preds;
  preds.reserve(input.members.size());
  for (std::size_t m = 0; m < input.members.size(); ++m) {
    preds.push_back(input.members[m][rows[m][i]].spans);
  }
  AnnotatedDocument out;
  out.doc_id = base.doc_id;
  out.source = base.source;
  out.text = base.text;
  out.meta = base.meta;
  out.spans = input.mode == VoteMode::span ? vote_spans(preds, threshold)
                                           : vote_tokens(base.text, preds, threshold);
  return out;
}

}  // namespace detail

Corpus ensemble_corpus(const EnsembleInput& input) {
  const auto threshold = detail::resolve_threshold(input);
  const auto rows = detail::align_members(input);
  const auto n = static_cast<std::ptrdiff_t>(input.members.front().size());
  Corpus out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = detail::vote_document(input, rows, threshold, idx);
  }
  return out;
}

}  // namespace aener
