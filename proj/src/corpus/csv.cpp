#include "aener/csv.hpp"

#include <fstream>
#include <sstream>

#include "aener/error.hpp"

namespace aener::csv {

std::size_t Table::require_column(std::string_view column) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return i;
  }
  throw DataError(origin + ": missing required column " + std::string(column));
}

Table parse(std::string_view content, std::string origin) {
  // Byte-order mark from spreadsheet exports.
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string fieldbuf;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(fieldbuf));
    fieldbuf.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // A lone empty field is a blank line.
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          fieldbuf.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        fieldbuf.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started || !fieldbuf.empty()) {
          throw DataError(origin + ":" + std::to_string(line) +
                          ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        fieldbuf.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) throw DataError(origin + ": unterminated quoted field");
  if (field_started || !fieldbuf.empty() || !record.empty()) end_record();

  Table t;
  t.origin = std::move(origin);
  if (records.empty()) return t;
  t.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& row = records[r];
    row.resize(t.header.size());  // short rows pad with empty fields
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open CSV file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

}  // namespace aener::csv
