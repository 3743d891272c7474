#include "tqu/finite/json.hpp"

#include "tqu/errors.hpp"

namespace tqu::finite {

nlohmann::json to_json(Subset s) {
  nlohmann::json j = nlohmann::json::array();
  for (unsigned e : s.elements()) j.push_back(e);
  return j;
}

Subset subset_from_json(const nlohmann::json& j, unsigned n) {
  if (!j.is_array()) throw InputError("subset must be a JSON array");
  Subset s;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw InputError("subset elements must be non-negative integers");
    const auto v = e.get<std::uint64_t>();
    if (v >= n) throw InputError("element " + std::to_string(v) + " outside ground set of size " + std::to_string(n));
    s |= Subset::singleton(static_cast<unsigned>(v));
  }
  return s;
}

nlohmann::json to_json(const FiniteTopology& t) {
  nlohmann::json opens = nlohmann::json::array();
  for (Subset o : t.opens()) opens.push_back(to_json(o));
  return {{"n", t.n()}, {"opens", opens}};
}

FiniteTopology topology_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens")) {
    throw InputError("topology JSON needs \"n\" and \"opens\"");
  }
  if (!j["n"].is_number_unsigned()) throw InputError("\"n\" must be a non-negative integer");
  const auto n = j["n"].get<unsigned>();
  if (n > kMaxPoints) throw InputError("ground set too large");
  std::vector<Subset> opens;
  for (const auto& o : j["opens"]) opens.push_back(subset_from_json(o, n));
  return FiniteTopology(n, std::move(opens));
}

}  // namespace tqu::finite
