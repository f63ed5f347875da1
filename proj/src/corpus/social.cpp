#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/tagging.hpp"
#include "aener/unicode.hpp"

namespace aener {

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::retweet: return "retweet";
    case RejectReason::quote: return "quote";
    case RejectReason::followers: return "followers";
    case RejectReason::date: return "date";
    case RejectReason::keywords: return "keywords";
    case RejectReason::lexicon: return "lexicon";
  }
  return "?";
}

namespace {

std::vector<std::u32string> folded_tokens(std::string_view text) {
  std::vector<std::u32string> out;
  for (const auto& tok : tokenize(text)) {
    out.push_back(unicode::fold(unicode::decode(tok.surface)));
  }
  return out;
}

class TokenIndex {
 public:
  explicit TokenIndex(std::string_view text) : tokens_(folded_tokens(text)) {}

  bool contains(std::string_view phrase) const {
    const auto needle = folded_tokens(phrase);
    if (needle.empty() || needle.size() > tokens_.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= tokens_.size(); ++i) {
      if (std::equal(needle.begin(), needle.end(), tokens_.begin() + i)) return true;
    }
    return false;
  }

  bool contains_any(const std::vector<std::string>& phrases) const {
    for (const auto& p : phrases) {
      if (contains(p)) return true;
    }
    return false;
  }

 private:
  std::vector<std::u32string> tokens_;
};

bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

bool contains_phrase(std::string_view text, std::string_view phrase) {
  return TokenIndex(text).contains(phrase);
}

FilterResult filter_social(const std::vector<SocialRecord>& records,
                           const FilterRules& rules, Source source) {
  FilterResult result;
  std::size_t index = 0;
  for (const auto& rec : records) {
    ++index;
    auto reject = [&](RejectReason r) { ++result.rejected[r]; };

    if (rec.is_retweet.value_or(false)) { reject(RejectReason::retweet); continue; }
    if (rec.is_quote.value_or(false)) { reject(RejectReason::quote); continue; }
    if (rules.follower_cap && rec.follower_count &&
        *rec.follower_count > *rules.follower_cap) {
      reject(RejectReason::followers);
      continue;
    }
    if (rec.timestamp && (rules.date_from || rules.date_to)) {
      const std::string day = rec.timestamp->substr(0, 10);
      if (!is_iso_date(day) || (rules.date_from && day < *rules.date_from) ||
          (rules.date_to && day > *rules.date_to)) {
        reject(RejectReason::date);
        continue;
      }
    }

    const TokenIndex idx(rec.text);
    bool all_sets = true;
    for (const auto& set : rules.keyword_sets) {
      if (!idx.contains_any(set)) {
        all_sets = false;
        break;
      }
    }
    if (!all_sets) { reject(RejectReason::keywords); continue; }
    if (!rules.ae_lexicon.empty() && !idx.contains_any(rules.ae_lexicon)) {
      reject(RejectReason::lexicon);
      continue;
    }

    AnnotatedDocument doc;
    doc.doc_id = std::string(to_string(source)) + ":" +
                 (rec.id.empty() ? std::to_string(index) : rec.id);
    doc.source = source;
    doc.text = rec.text;
    result.kept.push_back(std::move(doc));
  }
  return result;
}

std::vector<SocialRecord> load_social_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open records file " + path.string());
  std::vector<SocialRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (unicode::trim(std::string_view(line)).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(where + ": malformed JSON (" + e.what() + ")");
    }
    if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
      throw DataError(where + ": record needs a string 'text' field");
    }
    SocialRecord r;
    r.text = j["text"].get<std::string>();
    try {
      unicode::decode(r.text);
      if (auto it = j.find("id"); it != j.end() && !it->is_null()) {
        r.id = it->is_string() ? it->get<std::string>() : it->dump();
      }
      if (auto it = j.find("is_retweet"); it != j.end() && !it->is_null()) r.is_retweet = it->get<bool>();
      if (auto it = j.find("is_quote"); it != j.end() && !it->is_null()) r.is_quote = it->get<bool>();
      if (auto it = j.find("follower_count"); it != j.end() && !it->is_null())
        r.follower_count = it->get<std::int64_t>();
      if (auto it = j.find("timestamp"); it != j.end() && !it->is_null())
        r.timestamp = it->get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw DataError(where + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

FilterRules load_filter_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open filter rules " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string() + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw DataError(path.string() + ": rules must be a JSON object");

  FilterRules rules;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "keyword_sets") {
        rules.keyword_sets = value.get<std::vector<std::vector<std::string>>>();
      } else if (key == "date_from" || key == "date_to") {
        if (value.is_null()) continue;
        auto d = value.get<std::string>();
        if (!is_iso_date(d)) throw DataError(key + " must be YYYY-MM-DD, got " + d);
        (key == "date_from" ? rules.date_from : rules.date_to) = d;
      } else if (key == "follower_cap") {
        rules.follower_cap = value.is_null() ? std::nullopt
                                             : std::optional(value.get<std::int64_t>());
      } else if (key == "ae_lexicon") {
        if (value.is_null()) continue;
        std::filesystem::path lex = value.get<std::string>();
        if (lex.is_relative()) lex = path.parent_path() / lex;
        std::ifstream lin(lex);
        if (!lin) throw DataError("cannot open AE lexicon " + lex.string());
        std::string term;
        while (std::getline(lin, term)) {
          auto t = unicode::trim(std::string_view(term));
          if (!t.empty() && !t.starts_with('#')) rules.ae_lexicon.emplace_back(t);
        }
      } else {
        throw DataError("unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return rules;
}

}  // namespace aener
