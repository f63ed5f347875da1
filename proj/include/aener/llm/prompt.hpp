#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aener/types.hpp"

namespace aener::llm {

enum class PromptStyle { split, merged };
std::string_view to_string(PromptStyle s);
PromptStyle parse_prompt_style(std::string_view s);

struct Message {
  std::string role;
  std::string content;
  friend bool operator==(const Message&, const Message&) = default;
};

using MessageList = std::vector<Message>;

inline constexpr std::string_view kNotePlaceholder = "{note}";
inline constexpr std::string_view kEntityPlaceholder = "{entity name}";

// A prompt is a sequence of message templates. Across all contents {note}
// occurs exactly once; {entity name} occurs once for split style and never
// for merged style. Construct through make_template to enforce that.
struct PromptTemplate {
  std::string name;
  PromptStyle style = PromptStyle::merged;
  std::vector<Message> messages;
};

// Throws UsageError on placeholder arity violations.
PromptTemplate make_template(std::string name, PromptStyle style,
                             std::vector<Message> messages);

// Word substituted for {entity name}: "vaccine", "dose", "adverse event".
std::string_view entity_prompt_name(EntityType t);

// etype must be present iff the style is split (UsageError otherwise).
MessageList render_prompt(const PromptTemplate& t, std::string_view note,
                          std::optional<EntityType> etype = std::nullopt);

// Built-in templates:
//   gpt2-merged           pretrained GPT-2, single user string
//   gpt2-finetuned-split  question/context pair
//   gpt35-merged          system + user (also registered as gpt4-merged)
//   gpt35-finetuned-split system + user, the default
//   llama2-split          single user string
const std::vector<PromptTemplate>& builtin_templates();
const PromptTemplate& builtin_template(std::string_view name);  // UsageError
inline constexpr std::string_view kDefaultTemplate = "gpt35-finetuned-split";

// JSON: {"name":..., "style":"split"|"merged", "messages":[{role,content}]}
PromptTemplate load_template(const std::string& path);

}  // namespace aener::llm
