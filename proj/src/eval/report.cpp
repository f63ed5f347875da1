#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "aener/eval.hpp"

namespace aener {

namespace {

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// "0.940" -> "0.94", "1.000" -> "1"
std::string compact3(double v) {
  std::string s = fixed3(v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

void score_section(std::ostringstream& out, const char* title, const ScoreSection& sec) {
  out << title << '\n';
  out << std::left << std::setw(15) << "entity" << std::right << std::setw(8) << "tp"
      << std::setw(8) << "fp" << std::setw(8) << "fn" << std::setw(11) << "precision"
      << std::setw(9) << "recall" << std::setw(8) << "f1" << '\n';
  auto row = [&](std::string_view name, const MatchCounts& c) {
    const auto s = score(c);
    out << std::left << std::setw(15) << name << std::right << std::setw(8) << c.tp
        << std::setw(8) << c.fp << std::setw(8) << c.fn << std::setw(11)
        << fixed3(s.precision) << std::setw(9) << fixed3(s.recall) << std::setw(8)
        << fixed3(s.f1) << '\n';
  };
  for (EntityType t : kEntityTypes) row(to_string(t), sec.counts[index_of(t)]);
  row("Micro-average", sec.micro());
}

}  // namespace

std::string format_score_table(const ScoreReport& report, bool strict, bool relaxed) {
  std::ostringstream out;
  if (relaxed) score_section(out, "Relaxed F1", report.relaxed);
  if (relaxed && strict) out << '\n';
  if (strict) score_section(out, "Strict F1", report.strict);
  return out.str();
}

std::string format_score_jsonl(const ScoreReport& report, bool strict, bool relaxed) {
  std::ostringstream out;
  auto emit = [&](const char* mode, const ScoreSection& sec) {
    auto line = [&](std::string_view name, const MatchCounts& c) {
      const auto s = score(c);
      nlohmann::ordered_json j;
      j["mode"] = mode;
      j["entity"] = name;
      j["tp"] = c.tp;
      j["fp"] = c.fp;
      j["fn"] = c.fn;
      j["precision"] = s.precision;
      j["recall"] = s.recall;
      j["f1"] = s.f1;
      out << j.dump() << '\n';
    };
    for (EntityType t : kEntityTypes) line(to_string(t), sec.counts[index_of(t)]);
    line("micro", sec.micro());
  };
  if (relaxed) emit("relaxed", report.relaxed);
  if (strict) emit("strict", report.strict);
  return out.str();
}

namespace {

std::string ratio_or_dash(std::size_t n, std::size_t d) {
  return d == 0 ? std::string("-") : format_ratio(n, d);
}

}  // namespace

std::string format_error_table(const ErrorBreakdown& e) {
  static constexpr const char* kHeaders[] = {
      "Boundary Mismatch (out of human annotated entities)",
      "False Positive (out of machine annotated entities)",
      "False Negative (out of human annotated entities)",
      "Incorrect Entity Type (out of machine annotated entities)"};
  std::vector<std::array<std::string, 4>> cells;
  for (EntityType t : kEntityTypes) {
    const auto& x = e.by_type[index_of(t)];
    cells.push_back({ratio_or_dash(x.boundary_mismatch, x.gold),
                     ratio_or_dash(x.false_positive, x.predicted),
                     ratio_or_dash(x.false_negative, x.gold),
                     ratio_or_dash(x.incorrect_type, x.predicted)});
  }
  std::array<std::size_t, 4> width{};
  for (std::size_t c = 0; c < 4; ++c) {
    width[c] = std::string_view(kHeaders[c]).size();
    for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto cell = [&](std::size_t c, std::string_view text) {
    out << "  ";
    if (c + 1 < 4) {
      out << std::setw(static_cast<int>(width[c])) << text;
    } else {
      out << text;
    }
  };
  out << std::left << std::setw(9) << "entity";
  for (std::size_t c = 0; c < 4; ++c) cell(c, kHeaders[c]);
  out << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::setw(9) << to_string(kEntityTypes[r]);
    for (std::size_t c = 0; c < 4; ++c) cell(c, cells[r][c]);
    out << '\n';
  }
  return out.str();
}

std::string format_error_jsonl(const ErrorBreakdown& e) {
  std::ostringstream out;
  for (EntityType t : kEntityTypes) {
    const auto& x = e.by_type[index_of(t)];
    nlohmann::ordered_json j;
    j["entity"] = to_string(t);
    j["gold"] = x.gold;
    j["predicted"] = x.predicted;
    j["exact"] = x.exact;
    j["boundary_mismatch"] = x.boundary_mismatch;
    j["false_positive"] = x.false_positive;
    j["false_negative"] = x.false_negative;
    j["incorrect_type"] = x.incorrect_type;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string format_agreement_table(const AgreementReport& a) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "Entities" << "Inter-rater agreement\n";
  for (EntityType t : kEntityTypes) {
    out << std::setw(10) << to_string(t) << compact3(a.by_type[index_of(t)]) << '\n';
  }
  out << std::setw(10) << "Overall" << compact3(a.overall) << '\n';
  return out.str();
}

std::string format_agreement_jsonl(const AgreementReport& a) {
  std::ostringstream out;
  for (EntityType t : kEntityTypes) {
    nlohmann::ordered_json j;
    j["entity"] = to_string(t);
    j["agreement"] = a.by_type[index_of(t)];
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json j;
  j["entity"] = "overall";
  j["agreement"] = a.overall;
  out << j.dump() << '\n';
  return out.str();
}

}  // namespace aener
