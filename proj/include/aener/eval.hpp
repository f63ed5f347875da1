#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "aener/types.hpp"

namespace aener {

struct MatchCounts {
  std::size_t tp = 0, fp = 0, fn = 0;

  MatchCounts& operator+=(const MatchCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend MatchCounts operator+(MatchCounts a, const MatchCounts& b) { return a += b; }
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

struct EntityScore {
  double precision = 1.0, recall = 1.0, f1 = 1.0;
};

// Exact (start, end, type) matching.
MatchCounts match_strict(const SpanSet& gold, const SpanSet& pred);

// Maximum one-to-one matching over same-type overlapping pairs.
MatchCounts match_relaxed(const SpanSet& gold, const SpanSet& pred);

// Size of a maximum bipartite matching; adjacency[i] lists right vertices of
// left vertex i. Augmenting paths (Kuhn).
std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::size_t right_size);

// p = tp/(tp+fp) or 1 when empty; r likewise; f1 = 2pr/(p+r) or 0.
EntityScore score(const MatchCounts& mc);

enum class MatchMode { strict, relaxed };

// Counts per entity type for one matching mode.
using TypedCounts = std::array<MatchCounts, kNumEntityTypes>;

TypedCounts count_by_type(const SpanSet& gold, const SpanSet& pred,
                          MatchMode mode);

struct ScoreSection {
  TypedCounts counts{};
  MatchCounts micro() const { return counts[0] + counts[1] + counts[2]; }
};

struct ScoreReport {
  ScoreSection strict;
  ScoreSection relaxed;
};

// Throws DataError when the corpora are not aligned (same ids and texts; the
// order may differ). Per-document counts are computed in parallel and pooled.
ScoreReport score_corpus(const Corpus& gold, const Corpus& pred);

struct AgreementReport {
  std::array<double, kNumEntityTypes> by_type{};
  double overall = 0.0;
};

// Strict F1 of b against a per type, and pooled over types.
AgreementReport agreement(const Corpus& a, const Corpus& b);

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

struct TypeErrors {
  std::size_t gold = 0;       // denominator for boundary and fn
  std::size_t predicted = 0;  // denominator for fp and incorrect type
  std::size_t exact = 0;      // counted on the gold side
  std::size_t boundary_mismatch = 0;  // keyed by gold type
  std::size_t false_positive = 0;     // keyed by predicted type
  std::size_t false_negative = 0;     // keyed by gold type
  std::size_t incorrect_type = 0;     // keyed by predicted type

  TypeErrors& operator+=(const TypeErrors& o);
  friend bool operator==(const TypeErrors&, const TypeErrors&) = default;
};

struct ErrorBreakdown {
  std::array<TypeErrors, kNumEntityTypes> by_type{};
  ErrorBreakdown& operator+=(const ErrorBreakdown& o);
  friend bool operator==(const ErrorBreakdown&, const ErrorBreakdown&) = default;
};

// Each predicted span is assigned to exactly one of: exact match, boundary
// mismatch (overlaps an unconsumed same-type gold), incorrect type (overlaps
// an unconsumed gold of another type), false positive. Exact matches are
// resolved for all predictions first; remaining predictions are then taken
// in document order. Unconsumed gold spans are false negatives.
ErrorBreakdown categorize_errors(const SpanSet& gold, const SpanSet& pred);

// Detailed per-instance tallies used by the partition identities.
struct ErrorTally {
  std::size_t exact = 0, boundary = 0, incorrect_type = 0, false_positive = 0,
              false_negative = 0;
};
ErrorTally tally(const ErrorBreakdown& e);

ErrorBreakdown categorize_corpus(const Corpus& gold, const Corpus& pred);

// "n/d, P%" with P rounded half-up to two decimals; "n/d, 0%" when n == 0.
// Throws std::invalid_argument when d == 0.
std::string format_ratio(std::size_t n, std::size_t d);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

std::string format_score_table(const ScoreReport& report, bool strict,
                               bool relaxed);
std::string format_score_jsonl(const ScoreReport& report, bool strict,
                               bool relaxed);
std::string format_error_table(const ErrorBreakdown& e);
std::string format_error_jsonl(const ErrorBreakdown& e);
std::string format_agreement_table(const AgreementReport& a);
std::string format_agreement_jsonl(const AgreementReport& a);

// Throws DataError naming the first doc id missing on either side or whose
// text differs. Returns, for each document of `a`, the index into `b`.
std::vector<std::size_t> align(const Corpus& a, const Corpus& b);

}  // namespace aener
