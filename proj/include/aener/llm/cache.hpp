#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "aener/llm/prompt.hpp"

namespace aener::llm {

inline constexpr std::string_view kDefaultModel = "gpt-35-turbo-0125";

struct GenerationParams {
  double temperature = 0.3;
  int max_output_tokens = 4096;
  std::string model_name{kDefaultModel};
};

// Throws UsageError when temperature < 0 or max_output_tokens < 1.
void check(const GenerationParams& p);

// Stable text form used for cache keys, e.g. "temperature=0.3;max_tokens=4096".
std::string serialize_params(const GenerationParams& p);

// SHA-256 (hex) over length-prefixed model name, serialized params, and each
// message's role and content.
std::string cache_key(const GenerationParams& p, const MessageList& messages);

std::string sha256_hex(std::string_view data);

// Append-only store of completions, one JSON record per line:
//   {key, model, prompt, params, completion, timestamp}
// Lookups take a shared lock; appends are serialized and flushed per record.
class PredictionCache {
 public:
  PredictionCache() = default;  // memory only
  // Loads existing records; throws DataError on malformed lines or a key
  // recorded twice with different completions.
  explicit PredictionCache(std::filesystem::path path);

  std::optional<std::string> get(const std::string& key) const;

  // First writer wins: if `key` is already present the stored completion is
  // kept and returned, otherwise `completion` is appended and returned.
  std::string put(const std::string& key, const GenerationParams& p,
                  const MessageList& messages, const std::string& completion);

  std::size_t size() const;

 private:
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
};

}  // namespace aener::llm
