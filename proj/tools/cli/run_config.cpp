#include "run_config.hpp"

#include <algorithm>
#include <fstream>

#include "nuclearity/error.hpp"
#include "nuclearity/json_text.hpp"

namespace nuclearity::cli {

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open config file " + path);
  io::Json j;
  try {
    in >> j;
    RunConfig c;
    if (j.contains("truncation_dims")) c.truncation_dims = j.at("truncation_dims").get<std::vector<int>>();
    if (j.contains("block")) c.block = j.at("block").get<int>();
    if (j.contains("tolerance_overrides")) {
      c.tolerance_overrides = j.at("tolerance_overrides").get<std::map<std::string, double>>();
    }
    if (j.contains("output_format")) c.output_format = j.at("output_format").get<std::string>();
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed config file: ") + e.what());
  }
}

void normalize(RunConfig& config, int block) {
  auto& dims = config.truncation_dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  if (dims.empty()) throw Error(ErrorKind::InvalidInput, "no truncation dimensions");
  if (4 * block > dims.front()) throw Error(ErrorKind::InvalidInput, "block must not exceed min(dims)/4");
}

}  // namespace nuclearity::cli
