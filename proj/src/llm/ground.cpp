#include "aener/llm/ground.hpp"

#include <algorithm>

#include "aener/corpus.hpp"
#include "aener/unicode.hpp"

namespace aener::llm {

SpanSet ground(std::u32string_view text, std::string_view entity, EntityType type,
               GroundingCounters& counters) {
  const std::u32string needle_raw = unicode::decode(entity);
  const std::u32string needle = unicode::fold(unicode::trim(needle_raw));
  SpanSet out;
  if (needle.empty()) return out;

  const std::u32string hay = unicode::fold(text);
  std::size_t from = 0;
  while (true) {
    const auto hit = hay.find(needle, from);
    if (hit == std::u32string::npos) break;
    const auto end = hit + needle.size();
    out.push_back(make_span(text, static_cast<std::int64_t>(hit),
                            static_cast<std::int64_t>(end), type));
    from = end;
  }
  if (out.empty()) ++counters.ungrounded;
  return out;
}

SpanSet ground(std::string_view text, std::string_view entity, EntityType type,
               GroundingCounters& counters) {
  return ground(std::u32string_view(unicode::decode(text)), entity, type, counters);
}

SpanSet merge_overlaps(std::u32string_view text, SpanSet spans,
                       GroundingCounters& counters) {
  std::sort(spans.begin(), spans.end(), [](const EntitySpan& a, const EntitySpan& b) {
    if (a.type != b.type) return a.type < b.type;
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  SpanSet out;
  for (auto& s : spans) {
    if (!out.empty() && out.back().type == s.type && s.start < out.back().end) {
      auto& last = out.back();
      if (s.start == last.start && s.end == last.end) continue;  // duplicate triple
      if (s.end > last.end) last.end = s.end;
      ++counters.merged;
      continue;
    }
    out.push_back(std::move(s));
  }
  for (auto& s : out) s = make_span(text, s.start, s.end, s.type);
  normalize(out);
  return out;
}

}  // namespace aener::llm
