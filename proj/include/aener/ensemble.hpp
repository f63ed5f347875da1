#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "aener/types.hpp"

namespace aener {

enum class VoteMode { span, token };
std::string_view to_string(VoteMode m);
VoteMode parse_vote_mode(std::string_view s);  // UsageError

// floor(k/2) + 1
constexpr std::size_t majority_threshold(std::size_t k) { return k / 2 + 1; }

// A triple is kept iff it occurs in at least `threshold` of the sets. Each
// set votes at most once per triple.
SpanSet vote_spans(std::span<const SpanSet> predictions, std::size_t threshold);

// Per type and token: covered iff at least `threshold` predictors have a span
// of that type overlapping the token. Maximal covered runs become spans.
SpanSet vote_tokens(std::string_view text, std::span<const SpanSet> predictions,
                    std::size_t threshold);

struct EnsembleInput {
  std::vector<Corpus> members;
  VoteMode mode = VoteMode::span;
  std::size_t threshold = 0;  // 0: majority_threshold(members.size())
};

// Throws UsageError for bad k/threshold and DataError when the members
// disagree on doc ids or text (message names the first offending id).
// Documents are voted in parallel; output follows the first member's order.
Corpus ensemble_corpus(const EnsembleInput& input);

namespace detail {

// Validated threshold for `input`.
std::size_t resolve_threshold(const EnsembleInput& input);

// rows[m][i]: index in member m of the document at position i of member 0.
std::vector<std::vector<std::size_t>> align_members(const EnsembleInput& input);

// Votes the document at position `i` of member 0.
AnnotatedDocument vote_document(const EnsembleInput& input,
                                const std::vector<std::vector<std::size_t>>& rows,
                                std::size_t threshold, std::size_t i);

}  // namespace detail

}  // namespace aener
