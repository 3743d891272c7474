#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tqu::cli {

struct Failure {
  std::string case_id;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json got;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  double wall_time_ms = 0;

  bool ok() const { return failures.empty(); }
  /// {"suite","cases","failures":[{"case","inputs","expected","got"}],"wall_time_ms"}
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace tqu::cli
