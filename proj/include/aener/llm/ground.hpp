#pragma once

#include <atomic>
#include <cstddef>
#include <string_view>

#include "aener/types.hpp"

namespace aener::llm {

struct GroundingCounters {
  std::atomic<std::size_t> ungrounded{0};
  std::atomic<std::size_t> merged{0};
  std::atomic<std::size_t> untyped{0};
  std::atomic<std::size_t> unparsed{0};
};

// Every case-insensitive occurrence of `entity`, taken greedily left to right
// without overlap. Surfaces keep the document's casing. Zero hits increments
// counters.ungrounded.
SpanSet ground(std::u32string_view text, std::string_view entity,
               EntityType type, GroundingCounters& counters);
SpanSet ground(std::string_view text, std::string_view entity, EntityType type,
               GroundingCounters& counters);

// Sorts, deduplicates, and merges same-type overlapping spans into their
// union interval; each merge increments counters.merged.
SpanSet merge_overlaps(std::u32string_view text, SpanSet spans,
                       GroundingCounters& counters);

}  // namespace aener::llm
