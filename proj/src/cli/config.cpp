#include "aener/config.hpp"

#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

#include "aener/error.hpp"

namespace aener::cli {

namespace {

using json = nlohmann::json;
using Handler = std::function<void(const json&)>;

void dispatch(const json& obj, const std::string& scope,
              const std::map<std::string, Handler>& handlers) {
  if (!obj.is_object()) throw UsageError("config: '" + scope + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw UsageError("config: unknown key '" + (scope.empty() ? "" : scope + ".") + key + "'");
    }
    it->second(value);
  }
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": malformed JSON (" + e.what() + ")");
  }

  const auto base = path.parent_path();
  auto resolve = [&](const json& v) {
    std::filesystem::path p = v.get<std::string>();
    return p.is_relative() ? base / p : p;
  };

  RunConfig cfg;
  try {
    dispatch(root, "", {
      {"backend", [&](const json& b) {
         dispatch(b, "backend", {
           {"endpoint", [&](const json& v) { cfg.backend.endpoint = v.get<std::string>(); }},
           {"auth_env", [&](const json& v) { cfg.backend.auth_env = v.get<std::string>(); }},
           {"timeout_s", [&](const json& v) { cfg.backend.timeout = std::chrono::seconds(v.get<int>()); }},
           {"max_parallel", [&](const json& v) { cfg.backend.max_parallel = v.get<int>(); }},
           {"max_attempts", [&](const json& v) { cfg.backend.retry.max_attempts = v.get<int>(); }},
           {"backoff_ms", [&](const json& v) {
              cfg.backend.retry.base_backoff = std::chrono::milliseconds(v.get<int>()); }},
           {"offline", [&](const json& v) { cfg.backend.offline = v.get<bool>(); }},
         });
       }},
      {"generation", [&](const json& g) {
         dispatch(g, "generation", {
           {"model", [&](const json& v) { cfg.generation.model_name = v.get<std::string>(); }},
           {"temperature", [&](const json& v) { cfg.generation.temperature = v.get<double>(); }},
           {"max_tokens", [&](const json& v) { cfg.generation.max_output_tokens = v.get<int>(); }},
         });
       }},
      {"template", [&](const json& v) { cfg.template_name = v.get<std::string>(); }},
      {"template_file", [&](const json& v) { cfg.template_file = resolve(v); }},
      {"cache", [&](const json& v) { cfg.cache = resolve(v); }},
      {"split", [&](const json& s) {
         dispatch(s, "split", {
           {"ratios", [&](const json& v) { cfg.split.ratios = parse_ratios(v.get<std::string>()); }},
           {"seed", [&](const json& v) { cfg.split.seed = v.get<std::uint64_t>(); }},
         });
       }},
      {"ensemble", [&](const json& e) {
         dispatch(e, "ensemble", {
           {"mode", [&](const json& v) { cfg.ensemble_mode = parse_vote_mode(v.get<std::string>()); }},
           {"threshold", [&](const json& v) { cfg.ensemble_threshold = v.get<std::size_t>(); }},
         });
       }},
      {"filter_rules", [&](const json& v) { cfg.filter_rules = resolve(v); }},
      {"vax_type", [&](const json& v) { cfg.vax_type = v.get<std::string>(); }},
    });
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  llm::check(cfg.backend);
  llm::check(cfg.generation);
  return cfg;
}

}  // namespace aener::cli
