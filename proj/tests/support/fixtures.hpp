#pragma once

#include <string>
#include <string_view>

#include "aener/corpus.hpp"

namespace fixtures {

inline constexpr std::string_view kSoreArmText =
    "My first shot of moderna vaccine = very sore arm the next day and very tired "
    "so I slept a lot .";

// Span located by substring search on the ASCII sentence.
inline aener::EntitySpan find_span(std::string_view text, std::string_view needle,
                                   aener::EntityType type) {
  const auto pos = static_cast<std::int64_t>(text.find(needle));
  return {pos, pos + static_cast<std::int64_t>(needle.size()), type, std::string(needle)};
}

// A short post with one vaccine span and two ae spans.
inline aener::AnnotatedDocument sore_arm_document() {
  aener::AnnotatedDocument doc;
  doc.doc_id = "sore-arm-post";
  doc.source = aener::Source::reddit;
  doc.text = std::string(kSoreArmText);
  doc.spans = {find_span(kSoreArmText, "moderna vaccine", aener::EntityType::vaccine),
               find_span(kSoreArmText, "sore arm", aener::EntityType::ae),
               find_span(kSoreArmText, "tired", aener::EntityType::ae)};
  aener::normalize(doc.spans);
  return doc;
}

inline std::string fixture_path(std::string_view name) {
  return std::string(AENER_FIXTURE_DIR) + "/" + std::string(name);
}

}  // namespace fixtures
