#include <algorithm>
#include <stdexcept>

#include "aener/eval.hpp"

namespace aener {

TypeErrors& TypeErrors::operator+=(const TypeErrors& o) {
  gold += o.gold;
  predicted += o.predicted;
  exact += o.exact;
  boundary_mismatch += o.boundary_mismatch;
  false_positive += o.false_positive;
  false_negative += o.false_negative;
  incorrect_type += o.incorrect_type;
  return *this;
}

ErrorBreakdown& ErrorBreakdown::operator+=(const ErrorBreakdown& o) {
  for (std::size_t t = 0; t < kNumEntityTypes; ++t) by_type[t] += o.by_type[t];
  return *this;
}

ErrorBreakdown categorize_errors(const SpanSet& gold_in, const SpanSet& pred_in) {
  SpanSet gold = gold_in, pred = pred_in;
  normalize(gold);
  normalize(pred);

  ErrorBreakdown out;
  for (const auto& g : gold) ++out.by_type[index_of(g.type)].gold;
  for (const auto& p : pred) ++out.by_type[index_of(p.type)].predicted;

  std::vector<char> consumed(gold.size()), assigned(pred.size());

  // (1) exact triples
  for (std::size_t j = 0; j < pred.size(); ++j) {
    auto it = std::lower_bound(gold.begin(), gold.end(), pred[j]);
    if (it != gold.end() && *it == pred[j]) {
      consumed[static_cast<std::size_t>(it - gold.begin())] = 1;
      assigned[j] = 1;
      ++out.by_type[index_of(pred[j].type)].exact;
    }
  }

  // (2) same-type overlap, then (3) other-type overlap, in document order.
  auto overlap_pass = [&](bool same_type) {
    for (std::size_t j = 0; j < pred.size(); ++j) {
      if (assigned[j]) continue;
      for (std::size_t i = 0; i < gold.size(); ++i) {
        if (consumed[i] || !gold[i].overlaps(pred[j])) continue;
        if ((gold[i].type == pred[j].type) != same_type) continue;
        consumed[i] = 1;
        assigned[j] = 1;
        if (same_type) {
          ++out.by_type[index_of(gold[i].type)].boundary_mismatch;
        } else {
          ++out.by_type[index_of(pred[j].type)].incorrect_type;
        }
        break;
      }
    }
  };
  overlap_pass(true);
  overlap_pass(false);

  for (std::size_t j = 0; j < pred.size(); ++j) {
    if (!assigned[j]) ++out.by_type[index_of(pred[j].type)].false_positive;
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!consumed[i]) ++out.by_type[index_of(gold[i].type)].false_negative;
  }
  return out;
}

ErrorTally tally(const ErrorBreakdown& e) {
  ErrorTally t;
  for (const auto& x : e.by_type) {
    t.exact += x.exact;
    t.boundary += x.boundary_mismatch;
    t.incorrect_type += x.incorrect_type;
    t.false_positive += x.false_positive;
    t.false_negative += x.false_negative;
  }
  return t;
}

ErrorBreakdown categorize_corpus(const Corpus& gold, const Corpus& pred) {
  const auto rows = align(gold, pred);
  const auto n = static_cast<std::ptrdiff_t>(gold.size());
  std::vector<ErrorBreakdown> per_doc(gold.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    per_doc[idx] = categorize_errors(gold[idx].spans, pred[rows[idx]].spans);
  }
  ErrorBreakdown total;
  for (const auto& e : per_doc) total += e;
  return total;
}

std::string format_ratio(std::size_t n, std::size_t d) {
  if (d == 0) throw std::invalid_argument("format_ratio: denominator must be positive");
  std::string out = std::to_string(n) + "/" + std::to_string(d) + ", ";
  if (n == 0) return out + "0%";
  // Hundredths of a percent, rounded half-up in integer arithmetic.
  const unsigned __int128 num = static_cast<unsigned __int128>(n) * 20000 + d;
  const auto hundredths = static_cast<std::uint64_t>(num / (2 * static_cast<unsigned __int128>(d)));
  const auto frac = hundredths % 100;
  out += std::to_string(hundredths / 100) + "." + (frac < 10 ? "0" : "") +
         std::to_string(frac) + "%";
  return out;
}

}  // namespace aener
