#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace aener::csv {

// RFC 4180 table: header row plus records. Quoted fields may contain commas,
// doubled quotes and line breaks.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a column, or throws DataError naming `column` and `origin`.
  std::size_t require_column(std::string_view column) const;
  std::string origin;
};

Table parse(std::string_view content, std::string origin = "<csv>");
Table read_file(const std::filesystem::path& path);

}  // namespace aener::csv
