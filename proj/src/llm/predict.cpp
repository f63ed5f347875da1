#include "aener/llm/predict.hpp"

#include <exception>
#include <mutex>

#include "aener/llm/parse.hpp"
#include "aener/unicode.hpp"

namespace aener::llm {

AnnotatedDocument predict_document(const AnnotatedDocument& doc,
                                   const PromptTemplate& tmpl,
                                   const GenerationParams& params,
                                   CompletionClient& client,
                                   GroundingCounters& counters) {
  const std::u32string text = unicode::decode(doc.text);
  SpanSet spans;

  auto ground_all = [&](const ParseResult& parsed, std::optional<EntityType> forced) {
    counters.unparsed += parsed.skipped;
    for (const auto& e : parsed.entities) {
      const auto type = forced ? forced : e.claimed;
      if (!type) {
        ++counters.untyped;
        continue;
      }
      auto found = ground(text, e.text, *type, counters);
      spans.insert(spans.end(), found.begin(), found.end());
    }
  };

  if (tmpl.style == PromptStyle::split) {
    for (EntityType t : kEntityTypes) {
      const auto raw = client.complete(params, render_prompt(tmpl, doc.text, t));
      ground_all(parse_generation(raw, PromptStyle::split), t);
    }
  } else {
    const auto raw = client.complete(params, render_prompt(tmpl, doc.text));
    ground_all(parse_generation(raw, PromptStyle::merged), std::nullopt);
  }

  AnnotatedDocument out = doc;
  out.spans = merge_overlaps(text, std::move(spans), counters);
  return out;
}

Corpus predict_corpus(const Corpus& corpus, const PromptTemplate& tmpl,
                      const GenerationParams& params, CompletionClient& client,
                      GroundingCounters& counters) {
  Corpus out(corpus.size());
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());

  // Requests are I/O bound; one OpenMP thread per in-flight request.
#pragma omp parallel for schedule(dynamic, 1) num_threads(client.config().max_parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    {
      std::lock_guard lock(failure_mu);
      if (failure) continue;
    }
    try {
      out[static_cast<std::size_t>(i)] =
          predict_document(corpus[static_cast<std::size_t>(i)], tmpl, params, client, counters);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace aener::llm
