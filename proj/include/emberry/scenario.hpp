#ifndef EMBERRY_SCENARIO_HPP
#define EMBERRY_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace emberry {

// Validated scenario config. Frequencies in the JSON are cyclic THz; they are
// converted to rad/s on load.
struct Scenario {
  std::string command;
  std::string raw_json;  // normalized echo for the metadata file
  std::string output;    // primary artifact filename
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 config error, 3 numerical failure
  std::vector<std::filesystem::path> written;
  std::string message;
};

// Parse + validate a scenario JSON text. Throws ConfigError with an
// aggregated, human-readable message listing every offending field.
Scenario validate_scenario(const std::string& json_text);

// Execute a validated scenario; writes the primary artifact and a
// .meta.json next to it under out_dir.
RunResult run_scenario(const std::string& json_text,
                       const std::filesystem::path& out_dir,
                       int threads = 1, unsigned seed = 12345);

std::string library_version();

}  // namespace emberry

#endif
