#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>

#include "aener/llm/cache.hpp"
#include "aener/llm/prompt.hpp"

namespace aener::llm {

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds base_backoff{500};
};

struct BackendConfig {
  std::string endpoint = "http://127.0.0.1:8000/v1/chat/completions";
  std::string auth_env = "OPENAI_API_KEY";  // empty: no auth header
  std::chrono::seconds timeout{60};
  int max_parallel = 4;
  RetryPolicy retry;
  bool offline = false;  // serve from cache only; a miss is a BackendError
};

void check(const BackendConfig& cfg);

// Request body for the chat-completions wire contract.
std::string build_request_body(const GenerationParams& p,
                               const MessageList& messages);
// Extracts choices[0].message.content; throws BackendError when malformed.
std::string extract_completion(std::string_view response_body);

// Cache-first completion client. Safe to share between threads.
class CompletionClient {
 public:
  CompletionClient(BackendConfig cfg, PredictionCache& cache);

  std::string complete(const GenerationParams& p, const MessageList& messages);

  std::size_t http_requests() const { return http_requests_.load(); }
  std::size_t cache_hits() const { return cache_hits_.load(); }
  const BackendConfig& config() const { return cfg_; }

  // Receives one line per failed attempt. Defaults to stderr.
  void set_logger(std::function<void(const std::string&)> log) {
    log_ = std::move(log);
  }

 private:
  std::string post_with_retry(const std::string& body);

  BackendConfig cfg_;
  PredictionCache& cache_;
  std::atomic<std::size_t> http_requests_{0};
  std::atomic<std::size_t> cache_hits_{0};
  std::function<void(const std::string&)> log_;
};

}  // namespace aener::llm
