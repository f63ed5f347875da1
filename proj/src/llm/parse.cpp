#include "aener/llm/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "aener/unicode.hpp"

namespace aener::llm {

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Removes one leading list marker: "-", "*", "•", "12." or "12)".
std::string_view strip_marker(std::string_view line) {
  if (line.starts_with("-") || line.starts_with("*")) {
    line.remove_prefix(1);
  } else if (line.starts_with("\xE2\x80\xA2")) {  // U+2022 bullet
    line.remove_prefix(3);
  } else {
    std::size_t d = 0;
    while (d < line.size() && line[d] >= '0' && line[d] <= '9') ++d;
    if (d > 0 && d < line.size() && (line[d] == '.' || line[d] == ')')) {
      line.remove_prefix(d + 1);
    }
  }
  return unicode::trim(line);
}

std::string_view strip_quotes(std::string_view s) {
  static constexpr std::string_view kQuotes[] = {
      "\"", "'", "`", "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99"};
  auto strip_one_end = [&](bool front) {
    for (auto q : kQuotes) {
      if (front ? s.starts_with(q) : s.ends_with(q)) {
        front ? s.remove_prefix(q.size()) : s.remove_suffix(q.size());
        return true;
      }
    }
    return false;
  };
  // Only strip when both ends carry a quote character.
  std::string_view saved = s;
  if (strip_one_end(true)) {
    if (!strip_one_end(false)) s = saved;
  }
  return unicode::trim(s);
}

bool is_refusal(std::string_view value) {
  auto v = lower_ascii(value);
  while (!v.empty() && v.back() == '.') v.pop_back();
  return v == "none" || v == "no entities";
}

}  // namespace

std::optional<EntityType> label_to_type(std::string_view label) {
  const auto l = lower_ascii(unicode::trim(label));
  if (l == "vaccine" || l == "vaccines") return EntityType::vaccine;
  if (l == "dose" || l == "doses" || l == "shot" || l == "shots") return EntityType::shot;
  if (l == "adverse event" || l == "adverse events" || l == "ae" || l == "aes")
    return EntityType::ae;
  return std::nullopt;
}

ParseResult parse_generation(std::string_view raw, PromptStyle style) {
  ParseResult result;
  std::set<std::pair<std::u32string, int>> seen;
  std::optional<EntityType> section;

  std::size_t pos = 0;
  while (pos <= raw.size()) {
    auto nl = raw.find('\n', pos);
    if (nl == std::string_view::npos) nl = raw.size();
    std::string_view line = unicode::trim(raw.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;

    std::string_view value = strip_marker(line);
    std::optional<EntityType> claimed;
    if (style == PromptStyle::merged) {
      claimed = section;
      if (auto colon = value.find(':'); colon != std::string_view::npos) {
        const auto label = unicode::trim(value.substr(0, colon));
        const auto rest = unicode::trim(value.substr(colon + 1));
        claimed = label_to_type(label);
        if (rest.empty()) {
          section = claimed;  // header line introducing a typed list
          continue;
        }
        value = strip_marker(rest);
      }
    }
    value = strip_quotes(value);
    if (value.empty()) {
      ++result.skipped;
      continue;
    }
    if (is_refusal(value)) continue;

    const int type_key = claimed ? static_cast<int>(*claimed) : -1;
    if (!seen.emplace(unicode::fold(unicode::decode(value)), type_key).second) continue;
    result.entities.push_back(GeneratedEntity{std::string(value), claimed});
  }
  return result;
}

}  // namespace aener::llm
