#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aener {

// The three entity labels of the adverse-event schema.
enum class EntityType : std::uint8_t { vaccine = 0, shot = 1, ae = 2 };

inline constexpr std::array<EntityType, 3> kEntityTypes = {
    EntityType::vaccine, EntityType::shot, EntityType::ae};
inline constexpr std::size_t kNumEntityTypes = kEntityTypes.size();

inline constexpr std::size_t index_of(EntityType t) {
  return static_cast<std::size_t>(t);
}

std::string_view to_string(EntityType t);
// Strict: only "vaccine", "shot", "ae". Throws DataError otherwise.
EntityType parse_entity_type(std::string_view label);
std::optional<EntityType> try_parse_entity_type(std::string_view label);

enum class Source : std::uint8_t { vaers, twitter, reddit, synthetic };

std::string_view to_string(Source s);
Source parse_source(std::string_view label);

// Offsets count Unicode scalar values; [start, end).
struct EntitySpan {
  std::int64_t start = 0;
  std::int64_t end = 0;
  EntityType type = EntityType::ae;
  std::string surface;

  // Identity is the (start, end, type) triple; surface is derived data.
  friend bool operator==(const EntitySpan& a, const EntitySpan& b) {
    return a.start == b.start && a.end == b.end && a.type == b.type;
  }
  friend std::strong_ordering operator<=>(const EntitySpan& a,
                                          const EntitySpan& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    if (auto c = a.end <=> b.end; c != 0) return c;
    return a.type <=> b.type;
  }

  bool overlaps(const EntitySpan& o) const {
    return start < o.end && o.start < end;
  }
};

using SpanSet = std::vector<EntitySpan>;

// Sorts by (start, end, type) and drops duplicate triples.
void normalize(SpanSet& spans);

struct AnnotatedDocument {
  std::string doc_id;
  Source source = Source::synthetic;
  std::string text;  // UTF-8
  SpanSet spans;
  // Side data that is not part of the annotation (e.g. VAERS symptom terms).
  std::map<std::string, std::string> meta;
};

using Corpus = std::vector<AnnotatedDocument>;

}  // namespace aener
