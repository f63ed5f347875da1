#include "aener/llm/client.hpp"

#include <cstdlib>
#include <iostream>
#include <regex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "aener/error.hpp"

namespace aener::llm {

void check(const BackendConfig& cfg) {
  if (cfg.max_parallel < 1) throw UsageError("max_parallel must be >= 1");
  if (cfg.retry.max_attempts < 1) throw UsageError("max_attempts must be >= 1");
  if (cfg.retry.base_backoff.count() < 0) throw UsageError("backoff must be >= 0");
}

std::string build_request_body(const GenerationParams& p, const MessageList& messages) {
  nlohmann::ordered_json j;
  j["model"] = p.model_name;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : messages) arr.push_back({{"role", m.role}, {"content", m.content}});
  j["messages"] = std::move(arr);
  j["temperature"] = p.temperature;
  j["max_tokens"] = p.max_output_tokens;
  return j.dump();
}

std::string extract_completion(std::string_view response_body) {
  try {
    auto j = nlohmann::json::parse(response_body);
    const auto& content = j.at("choices").at(0).at("message").at("content");
    if (!content.is_string()) throw BackendError("choices[0].message.content is not a string");
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw BackendError(std::string("malformed completion response: ") + e.what());
  }
}

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string& url) {
  static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) throw UsageError("invalid endpoint URL '" + url + "'");
  return {m[1].str(), m[2].matched ? m[2].str() : "/"};
}

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

CompletionClient::CompletionClient(BackendConfig cfg, PredictionCache& cache)
    : cfg_(std::move(cfg)), cache_(cache) {
  check(cfg_);
  log_ = [](const std::string& line) { std::cerr << line << '\n'; };
}

std::string CompletionClient::complete(const GenerationParams& p,
                                       const MessageList& messages) {
  check(p);
  const auto key = cache_key(p, messages);
  if (auto hit = cache_.get(key)) {
    ++cache_hits_;
    return *hit;
  }
  if (cfg_.offline) throw BackendError("cache miss for key " + key + " in offline mode");
  auto body = post_with_retry(build_request_body(p, messages));
  return cache_.put(key, p, messages, extract_completion(body));
}

std::string CompletionClient::post_with_retry(const std::string& body) {
  const auto ep = split_url(cfg_.endpoint);
  httplib::Client http(ep.origin);
  http.set_connection_timeout(cfg_.timeout);
  http.set_read_timeout(cfg_.timeout);
  http.set_write_timeout(cfg_.timeout);

  httplib::Headers headers;
  if (!cfg_.auth_env.empty()) {
    if (const char* token = std::getenv(cfg_.auth_env.c_str()); token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  std::string last_error;
  for (int attempt = 1; attempt <= cfg_.retry.max_attempts; ++attempt) {
    ++http_requests_;
    auto res = http.Post(ep.path, headers, body, "application/json");
    if (res && res->status >= 200 && res->status < 300) return res->body;

    if (res) {
      last_error = "HTTP " + std::to_string(res->status);
      if (!retryable(res->status)) {
        throw BackendError(cfg_.endpoint + ": " + last_error + " (not retryable): " +
                           res->body.substr(0, 200));
      }
    } else {
      last_error = "transport error: " + httplib::to_string(res.error());
    }
    log_("attempt " + std::to_string(attempt) + "/" +
         std::to_string(cfg_.retry.max_attempts) + " to " + cfg_.endpoint +
         " failed: " + last_error);
    if (attempt < cfg_.retry.max_attempts) {
      std::this_thread::sleep_for(cfg_.retry.base_backoff * (1LL << (attempt - 1)));
    }
  }
  throw BackendError(cfg_.endpoint + ": giving up after " +
                     std::to_string(cfg_.retry.max_attempts) + " attempts (" + last_error + ")");
}

}  // namespace aener::llm
