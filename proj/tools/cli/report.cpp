#include "report.hpp"

#include <sstream>

namespace tqu::cli {

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const Failure& f : failures) {
    fs.push_back({{"case", f.case_id}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"suite", suite}, {"cases", cases}, {"failures", fs}, {"wall_time_ms", wall_time_ms}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << cases << " cases, " << failures.size() << " failures (" << wall_time_ms
      << " ms)\n";
  for (const Failure& f : failures) {
    out << "  FAIL " << f.case_id << " inputs=" << f.inputs.dump() << " expected=" << f.expected.dump()
        << " got=" << f.got.dump() << "\n";
  }
  return out.str();
}

}  // namespace tqu::cli
