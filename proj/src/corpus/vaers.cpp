#include <unordered_map>
#include <unordered_set>

#include "aener/corpus.hpp"
#include "aener/csv.hpp"
#include "aener/error.hpp"
#include "aener/unicode.hpp"

namespace aener {

namespace {

// VAERS exports are not reliably UTF-8; fall back to Latin-1.
std::string to_utf8(const std::string& raw) {
  try {
    unicode::decode(raw);
    return raw;
  } catch (const DataError&) {
    std::string out;
    for (unsigned char c : raw) out += unicode::encode(static_cast<char32_t>(c));
    return out;
  }
}

std::string trimmed(const std::string& s) {
  return std::string(unicode::trim(std::string_view(s)));
}

}  // namespace

Corpus ingest_vaers(const std::filesystem::path& data_csv,
                    const std::filesystem::path& vax_csv,
                    const std::optional<std::filesystem::path>& symptoms_csv,
                    const std::string& vax_type_filter) {
  const auto data = csv::read_file(data_csv);
  const auto vax = csv::read_file(vax_csv);

  // Header checks first so a bad file fails even when it has no rows.
  const auto d_id = data.require_column("VAERS_ID");
  const auto d_text = data.require_column("SYMPTOM_TEXT");
  std::unordered_set<std::string> selected;
  if (!vax.header.empty()) {
    const auto v_id = vax.require_column("VAERS_ID");
    const auto v_type = vax.require_column("VAX_TYPE");
    for (const auto& row : vax.rows) {
      if (row[v_type] == vax_type_filter) selected.insert(trimmed(row[v_id]));
    }
  }

  std::unordered_map<std::string, std::string> symptoms;
  if (symptoms_csv) {
    const auto sym = csv::read_file(*symptoms_csv);
    if (!sym.header.empty()) {
      const auto s_id = sym.require_column("VAERS_ID");
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < sym.header.size(); ++i) {
        const auto& h = sym.header[i];
        if (h.starts_with("SYMPTOM") && !h.starts_with("SYMPTOMVERSION")) cols.push_back(i);
      }
      for (const auto& row : sym.rows) {
        auto& joined = symptoms[trimmed(row[s_id])];
        for (auto c : cols) {
          const auto term = trimmed(row[c]);
          if (term.empty()) continue;
          if (!joined.empty()) joined += "; ";
          joined += to_utf8(term);
        }
      }
    }
  }

  Corpus out;
  std::unordered_set<std::string> seen;
  for (const auto& row : data.rows) {
    const auto id = trimmed(row[d_id]);
    if (!seen.insert(id).second) {
      throw DataError(data.origin + ": duplicate VAERS_ID " + id);
    }
    if (!selected.contains(id)) continue;
    AnnotatedDocument doc;
    doc.doc_id = "vaers:" + id;
    doc.source = Source::vaers;
    doc.text = to_utf8(row[d_text]);
    if (auto it = symptoms.find(id); it != symptoms.end() && !it->second.empty()) {
      doc.meta["symptoms"] = it->second;
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace aener
