#include "aener/llm/prompt.hpp"

#include <fstream>

#include <json.hpp>

#include "aener/error.hpp"

namespace aener::llm {

std::string_view to_string(PromptStyle s) {
  return s == PromptStyle::split ? "split" : "merged";
}

PromptStyle parse_prompt_style(std::string_view s) {
  if (s == "split") return PromptStyle::split;
  if (s == "merged") return PromptStyle::merged;
  throw UsageError("unknown prompt style '" + std::string(s) + "'");
}

namespace {

std::size_t count_occurrences(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

// Replaces placeholders found in the template text only; substituted values
// are never rescanned.
std::string substitute(std::string_view tmpl, std::string_view note,
                       std::string_view entity) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl.substr(i).starts_with(kNotePlaceholder)) {
      out += note;
      i += kNotePlaceholder.size();
    } else if (tmpl.substr(i).starts_with(kEntityPlaceholder)) {
      out += entity;
      i += kEntityPlaceholder.size();
    } else {
      out.push_back(tmpl[i++]);
    }
  }
  return out;
}

}  // namespace

PromptTemplate make_template(std::string name, PromptStyle style,
                             std::vector<Message> messages) {
  std::size_t notes = 0, entities = 0;
  for (const auto& m : messages) {
    notes += count_occurrences(m.content, kNotePlaceholder);
    entities += count_occurrences(m.content, kEntityPlaceholder);
  }
  if (notes != 1) {
    throw UsageError("template '" + name + "' must contain {note} exactly once (found " +
                     std::to_string(notes) + ")");
  }
  const std::size_t want = style == PromptStyle::split ? 1 : 0;
  if (entities != want) {
    throw UsageError("template '" + name + "' (" + std::string(to_string(style)) +
                     " style) must contain {entity name} " + std::to_string(want) +
                     " time(s), found " + std::to_string(entities));
  }
  return PromptTemplate{std::move(name), style, std::move(messages)};
}

std::string_view entity_prompt_name(EntityType t) {
  switch (t) {
    case EntityType::vaccine: return "vaccine";
    case EntityType::shot: return "dose";
    case EntityType::ae: return "adverse event";
  }
  return "";
}

MessageList render_prompt(const PromptTemplate& t, std::string_view note,
                          std::optional<EntityType> etype) {
  if ((t.style == PromptStyle::split) != etype.has_value()) {
    throw UsageError("template '" + t.name + "': an entity type is required for split "
                     "style and not allowed for merged style");
  }
  const std::string_view entity = etype ? entity_prompt_name(*etype) : std::string_view{};
  MessageList out;
  out.reserve(t.messages.size());
  for (const auto& m : t.messages) {
    out.push_back(Message{m.role, substitute(m.content, note, entity)});
  }
  return out;
}

const std::vector<PromptTemplate>& builtin_templates() {
  static const std::vector<PromptTemplate> templates = [] {
    const std::string gpt_system = "Assistant is a large language model trained by OpenAI.";
    const std::string gpt_merged_user =
        "Please extract all names of vaccine, dose, and adverse event from the "
        "following note, and put them in a list:{note}";
    std::vector<PromptTemplate> v;
    v.push_back(make_template(
        "gpt2-merged", PromptStyle::merged,
        {{"user",
          "Please extract all names of dose, vaccine, and adverse event from this "
          "note, and put them in a list: {note}"}}));
    v.push_back(make_template(
        "gpt2-finetuned-split", PromptStyle::split,
        {{"question", "Please extract all the names of {entity name} from the following note"},
         {"context", "{note}"}}));
    v.push_back(make_template("gpt35-merged", PromptStyle::merged,
                              {{"system", gpt_system}, {"user", gpt_merged_user}}));
    v.push_back(make_template(
        "gpt35-finetuned-split", PromptStyle::split,
        {{"system", "You are an assistant that is good at named entity recognition."},
         {"user",
          "Please only extract all {entity name} in the following note. Please output "
          "the entity directly. Do not contain other information: {note}"}}));
    v.push_back(make_template("gpt4-merged", PromptStyle::merged,
                              {{"system", gpt_system}, {"user", gpt_merged_user}}));
    v.push_back(make_template(
        "llama2-split", PromptStyle::split,
        {{"user", "Please extract all the names of {entity name} from the following note:{note}"}}));
    return v;
  }();
  return templates;
}

const PromptTemplate& builtin_template(std::string_view name) {
  for (const auto& t : builtin_templates()) {
    if (t.name == name) return t;
  }
  std::string known;
  for (const auto& t : builtin_templates()) known += (known.empty() ? "" : ", ") + t.name;
  throw UsageError("unknown template '" + std::string(name) + "' (built-in: " + known + ")");
}

PromptTemplate load_template(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open template file " + path);
  try {
    auto j = nlohmann::json::parse(in);
    std::vector<Message> messages;
    for (const auto& m : j.at("messages")) {
      messages.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
    }
    return make_template(j.value("name", path),
                         parse_prompt_style(j.at("style").get<std::string>()),
                         std::move(messages));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace aener::llm
