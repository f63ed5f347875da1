#include "aener/llm/cache.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "aener/error.hpp"
#include "aener/unicode.hpp"

namespace aener::llm {

void check(const GenerationParams& p) {
  if (!(p.temperature >= 0.0)) throw UsageError("temperature must be >= 0");
  if (p.max_output_tokens < 1) throw UsageError("max_output_tokens must be >= 1");
  if (p.model_name.empty()) throw UsageError("model name must not be empty");
}

std::string serialize_params(const GenerationParams& p) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p.temperature);
  return "temperature=" + std::string(buf, end) +
         ";max_tokens=" + std::to_string(p.max_output_tokens);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string cache_key(const GenerationParams& p, const MessageList& messages) {
  std::string buf;
  auto field = [&](std::string_view v) {
    buf += std::to_string(v.size());
    buf.push_back(':');
    buf += v;
  };
  field(p.model_name);
  field(serialize_params(p));
  field(std::to_string(messages.size()));
  for (const auto& m : messages) {
    field(m.role);
    field(m.content);
  }
  return sha256_hex(buf);
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

PredictionCache::PredictionCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  if (!in) return;  // created on first append
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (unicode::trim(std::string_view(line)).empty()) continue;
    const std::string where = path_->string() + ":" + std::to_string(lineno);
    try {
      auto j = nlohmann::json::parse(line);
      auto key = j.at("key").get<std::string>();
      auto completion = j.at("completion").get<std::string>();
      auto [it, inserted] = entries_.emplace(key, completion);
      if (!inserted && it->second != completion) {
        throw DataError(where + ": key " + key + " recorded with different completions");
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataError(where + ": malformed cache record (" + e.what() + ")");
    }
  }
}

std::optional<std::string> PredictionCache::get(const std::string& key) const {
  std::shared_lock lock(mu_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::string PredictionCache::put(const std::string& key, const GenerationParams& p,
                                 const MessageList& messages,
                                 const std::string& completion) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = entries_.emplace(key, completion);
  if (!inserted) return it->second;
  if (path_) {
    nlohmann::ordered_json j;
    j["key"] = key;
    j["model"] = p.model_name;
    auto prompt = nlohmann::ordered_json::array();
    for (const auto& m : messages) prompt.push_back({{"role", m.role}, {"content", m.content}});
    j["prompt"] = std::move(prompt);
    j["params"] = {{"temperature", p.temperature}, {"max_tokens", p.max_output_tokens}};
    j["completion"] = completion;
    j["timestamp"] = utc_timestamp();
    std::ofstream out(*path_, std::ios::app | std::ios::binary);
    out << j.dump() << '\n';
    out.flush();
    if (!out) {
      entries_.erase(it);
      throw DataError("cannot append to cache file " + path_->string());
    }
  }
  return completion;
}

std::size_t PredictionCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace aener::llm
