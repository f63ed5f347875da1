#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/unicode.hpp"

namespace aener {

using ojson = nlohmann::ordered_json;

namespace {

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_field(const ojson& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) throw DataError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const ojson& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer()) throw DataError(where + ": field '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

AnnotatedDocument parse_record(const std::string& line, const std::string& where) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const ojson::parse_error& e) {
    throw DataError(where + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw DataError(where + ": record must be a JSON object");

  AnnotatedDocument doc;
  doc.doc_id = string_field(j, "doc_id", where);
  try {
    doc.source = parse_source(string_field(j, "source", where));
    doc.text = string_field(j, "text", where);
    unicode::decode(doc.text);  // reject invalid UTF-8 early
  } catch (const DataError& e) {
    throw DataError(where + ": " + e.what());
  }

  const auto& spans = field(j, "spans", where);
  if (!spans.is_array()) throw DataError(where + ": field 'spans' must be an array");
  for (const auto& s : spans) {
    if (!s.is_object()) throw DataError(where + ": span must be an object");
    EntitySpan span;
    span.start = int_field(s, "start", where);
    span.end = int_field(s, "end", where);
    try {
      span.type = parse_entity_type(string_field(s, "type", where));
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    span.surface = string_field(s, "surface", where);
    doc.spans.push_back(std::move(span));
  }

  if (auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw DataError(where + ": field 'meta' must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) throw DataError(where + ": meta values must be strings");
      doc.meta[k] = v.get<std::string>();
    }
  }
  return doc;
}

}  // namespace

Corpus read_corpus(std::istream& in, const std::string& origin) {
  Corpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (unicode::trim(std::string_view(line)).empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    corpus.push_back(parse_record(line, where));
  }

  for (const auto& [id, v] : validate(corpus)) {
    throw DataError(origin + ": document " + id + ": " + v.message);
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return read_corpus(in, path.string());
}

std::string to_json_line(const AnnotatedDocument& doc) {
  ojson j;
  j["doc_id"] = doc.doc_id;
  j["source"] = std::string(to_string(doc.source));
  j["text"] = doc.text;
  SpanSet spans = doc.spans;
  std::sort(spans.begin(), spans.end());
  ojson arr = ojson::array();
  for (const auto& s : spans) {
    ojson o;
    o["start"] = s.start;
    o["end"] = s.end;
    o["type"] = std::string(to_string(s.type));
    o["surface"] = s.surface;
    arr.push_back(std::move(o));
  }
  j["spans"] = std::move(arr);
  if (!doc.meta.empty()) {
    ojson meta = ojson::object();
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    j["meta"] = std::move(meta);
  }
  return j.dump();
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus) out << to_json_line(doc) << '\n';
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file " + path.string());
  write_corpus(corpus, out);
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace aener
