#include <algorithm>
#include <unordered_map>

#include "aener/error.hpp"
#include "aener/eval.hpp"

namespace aener {

namespace {

SpanSet unique_copy(const SpanSet& s) {
  SpanSet out = s;
  normalize(out);
  return out;
}

// Kuhn's augmenting path from left vertex u.
bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<std::ptrdiff_t>& match_right, std::vector<char>& visited) {
  for (std::size_t v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] < 0 ||
        augment(static_cast<std::size_t>(match_right[v]), adj, match_right, visited)) {
      match_right[v] = static_cast<std::ptrdiff_t>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::size_t right_size) {
  std::vector<std::ptrdiff_t> match_right(right_size, -1);
  std::vector<char> visited(right_size);
  std::size_t size = 0;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(u, adjacency, match_right, visited)) ++size;
  }
  return size;
}

MatchCounts match_strict(const SpanSet& gold, const SpanSet& pred) {
  const auto g = unique_copy(gold);
  const auto p = unique_copy(pred);
  std::size_t tp = 0;
  auto gi = g.begin();
  auto pi = p.begin();
  while (gi != g.end() && pi != p.end()) {
    if (*gi < *pi) {
      ++gi;
    } else if (*pi < *gi) {
      ++pi;
    } else {
      ++tp;
      ++gi;
      ++pi;
    }
  }
  return {tp, p.size() - tp, g.size() - tp};
}

MatchCounts match_relaxed(const SpanSet& gold, const SpanSet& pred) {
  const auto g = unique_copy(gold);
  const auto p = unique_copy(pred);
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j].start >= g[i].end) break;  // p sorted by start
      if (g[i].type == p[j].type && g[i].overlaps(p[j])) adj[i].push_back(j);
    }
  }
  const std::size_t tp = maximum_matching(adj, p.size());
  return {tp, p.size() - tp, g.size() - tp};
}

TypedCounts count_by_type(const SpanSet& gold, const SpanSet& pred, MatchMode mode) {
  std::array<SpanSet, kNumEntityTypes> g, p;
  for (const auto& s : gold) g[index_of(s.type)].push_back(s);
  for (const auto& s : pred) p[index_of(s.type)].push_back(s);
  TypedCounts out{};
  for (std::size_t t = 0; t < kNumEntityTypes; ++t) {
    out[t] = mode == MatchMode::strict ? match_strict(g[t], p[t]) : match_relaxed(g[t], p[t]);
  }
  return out;
}

std::vector<std::size_t> align(const Corpus& a, const Corpus& b) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!index.emplace(b[j].doc_id, j).second) {
      throw DataError("duplicate doc_id " + b[j].doc_id);
    }
  }
  std::vector<std::size_t> out;
  out.reserve(a.size());
  std::vector<char> used(b.size());
  for (const auto& doc : a) {
    auto it = index.find(doc.doc_id);
    if (it == index.end()) {
      throw DataError("doc_id " + doc.doc_id + " is missing from one of the corpora");
    }
    if (used[it->second]) throw DataError("duplicate doc_id " + doc.doc_id);
    used[it->second] = 1;
    if (b[it->second].text != doc.text) {
      throw DataError("text differs for doc_id " + doc.doc_id);
    }
    out.push_back(it->second);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used[j]) {
      throw DataError("doc_id " + b[j].doc_id + " is missing from one of the corpora");
    }
  }
  return out;
}

}  // namespace aener
