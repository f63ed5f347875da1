#include <algorithm>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/types.hpp"
#include "aener/unicode.hpp"

namespace aener {

std::string_view to_string(EntityType t) {
  switch (t) {
    case EntityType::vaccine: return "vaccine";
    case EntityType::shot: return "shot";
    case EntityType::ae: return "ae";
  }
  return "?";
}

std::optional<EntityType> try_parse_entity_type(std::string_view label) {
  if (label == "vaccine") return EntityType::vaccine;
  if (label == "shot") return EntityType::shot;
  if (label == "ae") return EntityType::ae;
  return std::nullopt;
}

EntityType parse_entity_type(std::string_view label) {
  if (auto t = try_parse_entity_type(label)) return *t;
  throw DataError("unknown entity type '" + std::string(label) +
                  "' (expected vaccine, shot or ae)");
}

std::string_view to_string(Source s) {
  switch (s) {
    case Source::vaers: return "vaers";
    case Source::twitter: return "twitter";
    case Source::reddit: return "reddit";
    case Source::synthetic: return "synthetic";
  }
  return "?";
}

Source parse_source(std::string_view label) {
  if (label == "vaers") return Source::vaers;
  if (label == "twitter") return Source::twitter;
  if (label == "reddit") return Source::reddit;
  if (label == "synthetic") return Source::synthetic;
  throw DataError("unknown source '" + std::string(label) + "'");
}

void normalize(SpanSet& spans) {
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
}

EntitySpan make_span(std::u32string_view text, std::int64_t start,
                     std::int64_t end, EntityType type) {
  return EntitySpan{start, end, type,
                    unicode::slice(text, static_cast<std::size_t>(start),
                                   static_cast<std::size_t>(end))};
}

}  // namespace aener
