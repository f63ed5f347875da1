#include <iomanip>
#include <sstream>

#include "aener/corpus.hpp"

namespace aener {

EntityCounts& EntityCounts::operator+=(const EntityCounts& o) {
  documents += o.documents;
  for (std::size_t i = 0; i < kNumEntityTypes; ++i) by_type[i] += o.by_type[i];
  return *this;
}

EntityStats entity_stats(const Corpus& corpus) {
  EntityStats stats;
  for (const auto& doc : corpus) {
    EntityCounts c;
    c.documents = 1;
    for (const auto& s : doc.spans) ++c.by_type[index_of(s.type)];
    stats.overall += c;
    stats.by_source[doc.source] += c;
  }
  return stats;
}

std::string format_stats_table(
    const std::vector<std::pair<std::string, EntityStats>>& splits) {
  std::size_t name_w = 11;  // fits "  synthetic"
  for (const auto& [name, _] : splits) name_w = std::max(name_w, name.size());

  std::ostringstream out;
  auto row = [&](const std::string& name, const EntityCounts& c) {
    out << std::left << std::setw(static_cast<int>(name_w)) << name << std::right
        << std::setw(11) << c.documents;
    for (auto n : c.by_type) out << std::setw(10) << n;
    out << std::setw(10) << c.total() << '\n';
  };

  out << std::left << std::setw(static_cast<int>(name_w)) << "split" << std::right
      << std::setw(11) << "documents";
  for (EntityType t : kEntityTypes) out << std::setw(10) << to_string(t);
  out << std::setw(10) << "total" << '\n';

  EntityCounts total;
  for (const auto& [name, stats] : splits) {
    row(name, stats.overall);
    for (const auto& [src, c] : stats.by_source) {
      row("  " + std::string(to_string(src)), c);
    }
    total += stats.overall;
  }
  if (splits.size() > 1) row("total", total);
  return out.str();
}

}  // namespace aener
