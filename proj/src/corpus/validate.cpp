#include <algorithm>
#include <limits>
#include <unordered_set>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/unicode.hpp"

namespace aener {

std::string_view describe(Invariant inv) {
  switch (inv) {
    case Invariant::start_before_end: return "start < end";
    case Invariant::in_bounds: return "span within text bounds";
    case Invariant::surface_matches: return "surface equals text slice";
    case Invariant::no_outer_space: return "surface has no leading/trailing whitespace";
    case Invariant::distinct_triples: return "duplicate span";
    case Invariant::same_type_overlap: return "same-type overlap";
    case Invariant::unique_doc_id: return "duplicate doc_id";
  }
  return "?";
}

namespace {

std::string span_label(const EntitySpan& s) {
  return "(" + std::to_string(s.start) + "," + std::to_string(s.end) + "," +
         std::string(to_string(s.type)) + ")";
}

}  // namespace

std::vector<Violation> validate(const AnnotatedDocument& doc) {
  std::vector<Violation> out;
  auto add = [&](Invariant inv, const EntitySpan& s) {
    out.push_back({inv, std::string(describe(inv)) + " violated by span " + span_label(s)});
  };

  const std::u32string text = unicode::decode(doc.text);
  const auto len = static_cast<std::int64_t>(text.size());

  for (const auto& s : doc.spans) {
    if (s.start >= s.end) {
      add(Invariant::start_before_end, s);
      continue;
    }
    if (s.start < 0 || s.end > len) {
      add(Invariant::in_bounds, s);
      continue;
    }
    std::u32string_view slice(text.data() + s.start,
                              static_cast<std::size_t>(s.end - s.start));
    if (unicode::encode(slice) != s.surface) add(Invariant::surface_matches, s);
    if (unicode::is_space(slice.front()) || unicode::is_space(slice.back()))
      add(Invariant::no_outer_space, s);
  }

  SpanSet sorted = doc.spans;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) add(Invariant::distinct_triples, sorted[i]);
  }

  // Same-type overlap: sweep each type in start order.
  for (EntityType t : kEntityTypes) {
    std::int64_t reach = std::numeric_limits<std::int64_t>::min();
    const EntitySpan* holder = nullptr;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto& s = sorted[i];
      if (s.type != t || s.start >= s.end) continue;
      if (i > 0 && s == sorted[i - 1]) continue;
      if (holder != nullptr && s.start < reach) {
        out.push_back({Invariant::same_type_overlap,
                       "same-type overlap between " + span_label(*holder) +
                           " and " + span_label(s)});
      }
      if (s.end > reach) {
        reach = s.end;
        holder = &s;
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, Violation>> validate(const Corpus& corpus) {
  std::vector<std::pair<std::string, Violation>> out;
  std::unordered_set<std::string> seen;
  for (const auto& doc : corpus) {
    if (!seen.insert(doc.doc_id).second) {
      out.emplace_back(doc.doc_id, Violation{Invariant::unique_doc_id,
                                             "duplicate doc_id " + doc.doc_id});
    }
    for (auto& v : validate(doc)) out.emplace_back(doc.doc_id, std::move(v));
  }
  return out;
}

void require_valid(const AnnotatedDocument& doc) {
  auto violations = validate(doc);
  if (!violations.empty()) {
    throw DataError("document " + doc.doc_id + ": " + violations.front().message);
  }
}

}  // namespace aener
