#include <charconv>
#include <numeric>

#include "aener/corpus.hpp"
#include "aener/error.hpp"
#include "aener/rng.hpp"

namespace aener {

std::array<std::uint64_t, 3> parse_ratios(std::string_view text) {
  std::array<std::uint64_t, 3> r{};
  std::size_t idx = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (true) {
    if (idx == 3) throw UsageError("ratios must have three parts: " + std::string(text));
    auto [next, ec] = std::from_chars(p, end, r[idx]);
    if (ec != std::errc() || next == p) {
      throw UsageError("malformed ratios '" + std::string(text) + "' (expected e.g. 8:1:1)");
    }
    ++idx;
    p = next;
    if (p == end) break;
    if (*p != ':') throw UsageError("malformed ratios '" + std::string(text) + "'");
    ++p;
  }
  if (idx != 3) throw UsageError("ratios must have three parts: " + std::string(text));
  if (r[0] + r[1] + r[2] == 0) throw UsageError("ratios must not all be zero");
  return r;
}

SplitSizes split_sizes(std::size_t n, const std::array<std::uint64_t, 3>& ratios) {
  const unsigned __int128 sum =
      static_cast<unsigned __int128>(ratios[0]) + ratios[1] + ratios[2];
  if (sum == 0) throw UsageError("split ratios must not sum to zero");
  SplitSizes s;
  s.train = static_cast<std::size_t>(static_cast<unsigned __int128>(n) * ratios[0] / sum);
  s.val = static_cast<std::size_t>(static_cast<unsigned __int128>(n) * ratios[1] / sum);
  s.test = n - s.train - s.val;
  return s;
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec) {
  const auto sizes = split_sizes(corpus.size(), spec.ratios);

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(spec.seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }

  CorpusSplit out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& doc = corpus[order[k]];
    if (k < sizes.train) {
      out.train.push_back(doc);
    } else if (k < sizes.train + sizes.val) {
      out.val.push_back(doc);
    } else {
      out.test.push_back(doc);
    }
  }
  return out;
}

}  // namespace aener
