#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nuclearity::cli {

struct RunConfig {
  std::vector<int> truncation_dims;
  std::optional<int> block;
  std::map<std::string, double> tolerance_overrides;
  std::string output_format = "json";
  std::string output_path;
};

RunConfig load_config(const std::string& path);

// Sorts and deduplicates dims; enforces block <= min(dims)/4.
void normalize(RunConfig& config, int block);

}  // namespace nuclearity::cli
