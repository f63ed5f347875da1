#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aener/llm/prompt.hpp"
#include "aener/types.hpp"

namespace aener::llm {

struct GeneratedEntity {
  std::string text;
  std::optional<EntityType> claimed;  // nullopt: unknown
  friend bool operator==(const GeneratedEntity&, const GeneratedEntity&) = default;
};

struct ParseResult {
  std::vector<GeneratedEntity> entities;
  std::size_t skipped = 0;  // unparseable lines (e.g. only a list marker)
};

// Line-oriented parse of a free-text generation. Merged style also accepts
// "label: value" lines and bare "label:" section headers that type the
// following lines.
ParseResult parse_generation(std::string_view raw, PromptStyle style);

// Maps {vaccine, dose, shot, adverse event, ae} (and plurals) to a type.
std::optional<EntityType> label_to_type(std::string_view label);

}  // namespace aener::llm
