#include <algorithm>
#include <ostream>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/tagging.hpp"
#include "aener/unicode.hpp"

namespace aener {

std::string to_string(const Tag& tag) {
  switch (tag.kind) {
    case Tag::Kind::outside: return "O";
    case Tag::Kind::begin: return "B-" + std::string(to_string(tag.type));
    case Tag::Kind::inside: return "I-" + std::string(to_string(tag.type));
  }
  return "O";
}

Tag parse_tag(std::string_view label) {
  if (label == "O") return Tag::outside();
  if (label.size() > 2 && label[1] == '-') {
    auto type = parse_entity_type(label.substr(2));
    if (label[0] == 'B') return Tag::begin(type);
    if (label[0] == 'I') return Tag::inside(type);
  }
  throw DataError("malformed IOB tag '" + std::string(label) + "'");
}

namespace {

// Higher wins when types compete for a token.
constexpr int priority(EntityType t) {
  switch (t) {
    case EntityType::ae: return 3;
    case EntityType::vaccine: return 2;
    case EntityType::shot: return 1;
  }
  return 0;
}

}  // namespace

EncodeResult encode_iob(const AnnotatedDocument& doc, const std::vector<Token>& tokens) {
  EncodeResult result;
  const std::size_t n = tokens.size();

  // Per token and type: index of the claiming span, or -1.
  constexpr std::ptrdiff_t kNone = -1;
  std::vector<std::array<std::ptrdiff_t, kNumEntityTypes>> claim(n);
  for (auto& c : claim) c.fill(kNone);

  SpanSet spans = doc.spans;
  std::sort(spans.begin(), spans.end());
  for (std::size_t si = 0; si < spans.size(); ++si) {
    const auto& s = spans[si];
    // Tokens overlapping [start, end), expanded outward to whole tokens.
    auto first = std::partition_point(tokens.begin(), tokens.end(),
                                      [&](const Token& t) { return t.end <= s.start; });
    auto last = first;
    while (last != tokens.end() && last->start < s.end) ++last;
    if (first == last) {
      ++result.clipped;  // span covers only whitespace; nothing to tag
      continue;
    }
    if (first->start != s.start || std::prev(last)->end != s.end) ++result.clipped;
    for (auto it = first; it != last; ++it) {
      claim[static_cast<std::size_t>(it - tokens.begin())][index_of(s.type)] =
          static_cast<std::ptrdiff_t>(si);
    }
  }

  result.tags.assign(n, Tag::outside());
  std::ptrdiff_t prev_span = kNone;
  std::optional<EntityType> prev_type;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<EntityType> winner;
    int claimants = 0;
    for (EntityType t : kEntityTypes) {
      if (claim[i][index_of(t)] == kNone) continue;
      ++claimants;
      if (!winner || priority(t) > priority(*winner)) winner = t;
    }
    if (claimants > 1) ++result.conflicts;
    if (!winner) {
      prev_span = kNone;
      prev_type.reset();
      continue;
    }
    const auto span_idx = claim[i][index_of(*winner)];
    const bool continues = prev_type == winner && prev_span == span_idx;
    result.tags[i] = continues ? Tag::inside(*winner) : Tag::begin(*winner);
    prev_span = span_idx;
    prev_type = winner;
  }
  return result;
}

SpanSet decode_iob(std::string_view text, const std::vector<Token>& tokens,
                   const TagSequence& tags) {
  if (tags.size() != tokens.size()) {
    throw DataError("tag sequence length " + std::to_string(tags.size()) +
                    " does not match token count " + std::to_string(tokens.size()));
  }
  const std::u32string u = unicode::decode(text);
  SpanSet out;
  std::optional<EntityType> open;
  std::size_t run_start = 0;

  auto close = [&](std::size_t end_tok) {
    if (open) {
      out.push_back(make_span(u, tokens[run_start].start, tokens[end_tok].end, *open));
      open.reset();
    }
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Tag& tag = tags[i];
    if (tag.kind == Tag::Kind::inside && open == tag.type) continue;
    if (i > 0) close(i - 1);
    if (tag.kind != Tag::Kind::outside) {
      open = tag.type;
      run_start = i;
    }
  }
  if (!tags.empty()) close(tags.size() - 1);
  normalize(out);
  return out;
}

void write_conll(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus) {
    const auto tokens = tokenize(doc.text);
    const auto enc = encode_iob(doc, tokens);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      out << tokens[i].surface << '\t' << to_string(enc.tags[i]) << '\n';
    }
    out << '\n';
  }
}

}  // namespace aener
