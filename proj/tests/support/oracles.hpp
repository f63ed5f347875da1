#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the matching, voting or scoring code under test.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "aener/rng.hpp"
#include "aener/types.hpp"

namespace oracle {

using Triple = std::tuple<std::int64_t, std::int64_t, int>;

inline std::set<Triple> triples(const aener::SpanSet& s) {
  std::set<Triple> out;
  for (const auto& x : s) out.emplace(x.start, x.end, static_cast<int>(x.type));
  return out;
}

// Strict counts by set intersection.
inline std::tuple<std::size_t, std::size_t, std::size_t> strict_counts(
    const aener::SpanSet& gold, const aener::SpanSet& pred) {
  const auto g = triples(gold), p = triples(pred);
  std::vector<Triple> common;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common));
  return {common.size(), p.size() - common.size(), g.size() - common.size()};
}

// Largest one-to-one pairing of same-type overlapping spans, by trying every
// assignment of each gold span to an unused prediction or to nothing.
inline std::size_t brute_force_relaxed_tp(const aener::SpanSet& gold_in,
                                          const aener::SpanSet& pred_in) {
  const auto gs = triples(gold_in), ps = triples(pred_in);
  const std::vector<Triple> g(gs.begin(), gs.end()), p(ps.begin(), ps.end());
  std::vector<bool> used(p.size());
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) -> std::size_t {
    if (i == g.size()) return 0;
    std::size_t result = best(i + 1);  // leave gold i unmatched
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (used[j]) continue;
      const auto& [gs_, ge, gt] = g[i];
      const auto& [ps_, pe, pt] = p[j];
      if (gt != pt || !(gs_ < pe && ps_ < ge)) continue;
      used[j] = true;
      result = std::max(result, 1 + best(i + 1));
      used[j] = false;
    }
    return result;
  };
  return best(0);
}

// Triples present in at least `threshold` of the sets, by direct counting.
inline std::set<Triple> majority(const std::vector<aener::SpanSet>& sets, std::size_t threshold) {
  std::map<Triple, std::size_t> votes;
  for (const auto& s : sets) {
    for (const auto& t : triples(s)) ++votes[t];
  }
  std::set<Triple> out;
  for (const auto& [t, n] : votes) {
    if (n >= threshold) out.insert(t);
  }
  return out;
}

// Random valid span set over a text of `len` characters with no whitespace
// constraints (for metric-only tests the surface is irrelevant).
inline aener::SpanSet random_spans(aener::SplitMix64& rng, std::size_t max_spans,
                                   std::int64_t len) {
  aener::SpanSet out;
  const auto n = rng.below(max_spans + 1);
  for (std::uint64_t k = 0; k < n; ++k) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      aener::EntitySpan s;
      s.start = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(len - 1)));
      s.end = s.start + 1 + static_cast<std::int64_t>(rng.below(6));
      if (s.end > len) s.end = len;
      s.type = aener::kEntityTypes[rng.below(3)];
      bool clash = false;
      for (const auto& o : out) clash = clash || (o.type == s.type && o.overlaps(s));
      if (clash) continue;
      out.push_back(s);
      break;
    }
  }
  return out;
}

}  // namespace oracle
