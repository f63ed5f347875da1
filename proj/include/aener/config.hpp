#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "aener/corpus.hpp"
#include "aener/ensemble.hpp"
#include "aener/llm/cache.hpp"
#include "aener/llm/client.hpp"

namespace aener::cli {

// Shared settings for all subcommands. Command-line flags override values
// loaded from a config file.
struct RunConfig {
  llm::BackendConfig backend;
  llm::GenerationParams generation;
  std::string template_name{llm::kDefaultTemplate};
  std::optional<std::filesystem::path> template_file;
  std::optional<std::filesystem::path> cache;
  SplitSpec split;
  VoteMode ensemble_mode = VoteMode::span;
  std::size_t ensemble_threshold = 0;  // 0: majority
  std::optional<std::filesystem::path> filter_rules;
  std::string vax_type = "COVID19";
};

// JSON object; unknown keys at any level are rejected with UsageError.
// Relative paths resolve against the config file's directory.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace aener::cli
