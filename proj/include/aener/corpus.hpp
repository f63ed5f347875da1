#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aener/types.hpp"

namespace aener {

// ---------------------------------------------------------------------------
// Canonical corpus format: one JSON object per line with keys
//   doc_id, source, text, spans[{start, end, type, surface}]
// in exactly that order, plus an optional trailing "meta" object that is
// only written when non-empty. Spans are written sorted by (start, end, type).
// ---------------------------------------------------------------------------

// Throws DataError naming the line number for malformed records, and the
// doc_id plus invariant for documents that fail validate().
Corpus load_corpus(const std::filesystem::path& path);
Corpus read_corpus(std::istream& in, const std::string& origin = "<stream>");

void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);
std::string to_json_line(const AnnotatedDocument& doc);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Invariant {
  start_before_end,   // start < end
  in_bounds,          // 0 <= start, end <= length(text)
  surface_matches,    // surface == text[start, end)
  no_outer_space,     // no leading/trailing whitespace in surface
  distinct_triples,   // no two identical (start, end, type)
  same_type_overlap,  // spans of one type do not overlap
  unique_doc_id,      // corpus-level
};

std::string_view describe(Invariant inv);

struct Violation {
  Invariant invariant;
  std::string message;
};

std::vector<Violation> validate(const AnnotatedDocument& doc);
// Per-document violations plus duplicate doc ids. Pairs are (doc_id, v).
std::vector<std::pair<std::string, Violation>> validate(const Corpus& corpus);

// Throws DataError on the first violation.
void require_valid(const AnnotatedDocument& doc);

// Builds a span whose surface is taken from `text` (decoded).
EntitySpan make_span(std::u32string_view text, std::int64_t start,
                     std::int64_t end, EntityType type);

// ---------------------------------------------------------------------------
// Splitting
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultSplitSeed = 42;

struct SplitSpec {
  std::array<std::uint64_t, 3> ratios{8, 1, 1};
  std::uint64_t seed = kDefaultSplitSeed;
};

// Parses "8:1:1". Throws UsageError.
std::array<std::uint64_t, 3> parse_ratios(std::string_view text);

struct SplitSizes {
  std::size_t train = 0, val = 0, test = 0;
  friend bool operator==(const SplitSizes&, const SplitSizes&) = default;
};

// floor(n*r0/sum), floor(n*r1/sum), remainder. Throws UsageError if sum == 0.
SplitSizes split_sizes(std::size_t n, const std::array<std::uint64_t, 3>& ratios);

struct CorpusSplit {
  Corpus train, val, test;
};

// Fisher-Yates shuffle driven by splitmix64(seed), then cut by split_sizes.
CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec);

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

struct EntityCounts {
  std::size_t documents = 0;
  std::array<std::size_t, kNumEntityTypes> by_type{};

  std::size_t total() const { return by_type[0] + by_type[1] + by_type[2]; }
  EntityCounts& operator+=(const EntityCounts& o);
  friend bool operator==(const EntityCounts&, const EntityCounts&) = default;
};

struct EntityStats {
  EntityCounts overall;
  std::map<Source, EntityCounts> by_source;
};

EntityStats entity_stats(const Corpus& corpus);

// Aligned table with one row per named split plus a total row.
std::string format_stats_table(
    const std::vector<std::pair<std::string, EntityStats>>& splits);

// ---------------------------------------------------------------------------
// VAERS ingestion
// ---------------------------------------------------------------------------

// Inner join of data and vax files on VAERS_ID, keeping IDs with at least one
// vax row whose VAX_TYPE equals `vax_type_filter` exactly. One document per
// ID, in data-file order. The optional symptoms file is attached as
// meta["symptoms"] ("; "-joined SYMPTOM1..SYMPTOMn values).
Corpus ingest_vaers(const std::filesystem::path& data_csv,
                    const std::filesystem::path& vax_csv,
                    const std::optional<std::filesystem::path>& symptoms_csv,
                    const std::string& vax_type_filter);

// ---------------------------------------------------------------------------
// Social-media filtering
// ---------------------------------------------------------------------------

struct SocialRecord {
  std::string id;
  std::string text;
  std::optional<bool> is_retweet;
  std::optional<bool> is_quote;
  std::optional<std::int64_t> follower_count;
  std::optional<std::string> timestamp;  // ISO-8601
};

struct FilterRules {
  // Every set must contribute at least one hit (conjunctive).
  std::vector<std::vector<std::string>> keyword_sets;
  std::optional<std::string> date_from;  // inclusive, YYYY-MM-DD
  std::optional<std::string> date_to;    // inclusive, YYYY-MM-DD
  std::optional<std::int64_t> follower_cap = 10000;
  std::vector<std::string> ae_lexicon;   // empty: not configured
};

enum class RejectReason { retweet, quote, followers, date, keywords, lexicon };
std::string_view to_string(RejectReason r);

struct FilterResult {
  Corpus kept;
  std::map<RejectReason, std::size_t> rejected;
};

// Case-insensitive whole-token match of `phrase` (one or more tokens) in
// `text`. Tokens follow the tagging tokenizer, so "J&J" is one token.
bool contains_phrase(std::string_view text, std::string_view phrase);

FilterResult filter_social(const std::vector<SocialRecord>& records,
                           const FilterRules& rules, Source source);

std::vector<SocialRecord> load_social_records(const std::filesystem::path& path);
// JSON rules file; "ae_lexicon" is a path to a one-term-per-line file,
// resolved relative to the rules file.
FilterRules load_filter_rules(const std::filesystem::path& path);

}  // namespace aener
