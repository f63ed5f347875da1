#pragma once

#include "aener/llm/client.hpp"
#include "aener/llm/ground.hpp"
#include "aener/llm/prompt.hpp"
#include "aener/types.hpp"

namespace aener::llm {

// Split style issues one completion per entity type; merged style one in
// total. Returns a copy of `doc` whose spans are the grounded predictions.
AnnotatedDocument predict_document(const AnnotatedDocument& doc,
                                   const PromptTemplate& tmpl,
                                   const GenerationParams& params,
                                   CompletionClient& client,
                                   GroundingCounters& counters);

// Documents are processed concurrently, at most cfg.max_parallel at a time.
// Output order matches input order.
Corpus predict_corpus(const Corpus& corpus, const PromptTemplate& tmpl,
                      const GenerationParams& params, CompletionClient& client,
                      GroundingCounters& counters);

}  // namespace aener::llm
