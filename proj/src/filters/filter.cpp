#include "tqu/filters/filter.hpp"

#include <algorithm>
#include <set>

#include "tqu/errors.hpp"

namespace tqu::filters {

FilterPresentation::FilterPresentation() : generators_{UPSet::naturals()} {}

FilterPresentation filter_from_generators(const std::vector<UPSet>& gs, bool cofinite_closed) {
  auto check_proper = [&](const UPSet& g) {
    if (g.is_empty()) throw ImproperFilterError("generators meet in the empty set");
    if (cofinite_closed && g.is_finite()) {
      throw ImproperFilterError("generators meet in the finite set " + g.to_string() +
                                ", improper once finite modifications are allowed");
    }
  };
  std::set<UPSet> closed;
  std::vector<UPSet> frontier;
  for (const UPSet& g : gs) {
    check_proper(g);
    if (closed.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<UPSet> next;
    const std::vector<UPSet> current(closed.begin(), closed.end());
    for (const UPSet& a : frontier) {
      for (const UPSet& b : current) {
        UPSet c = a & b;
        check_proper(c);
        if (closed.insert(c).second) {
          if (closed.size() > kMaxGenerators) {
            throw ResourceError("intersection closure exceeds " + std::to_string(kMaxGenerators) + " generators");
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  FilterPresentation f;
  if (!closed.empty()) f.generators_.assign(closed.begin(), closed.end());
  f.cofinite_closed_ = cofinite_closed;
  return f;
}

FilterPresentation principal_filter(const UPSet& g) { return filter_from_generators({g}); }

FilterPresentation frechet_filter(std::size_t count) {
  std::vector<UPSet> gs;
  for (std::size_t i = 0; i < count; ++i) gs.push_back(UPSet::from(i + 1));
  return filter_from_generators(gs, true);
}

bool filter_contains(const FilterPresentation& f, const UPSet& m) {
  return std::any_of(f.generators().begin(), f.generators().end(), [&](const UPSet& g) {
    return f.cofinite_closed() ? g.almost_subset_of(m) : g.subset_of(m);
  });
}

bool filter_leq(const FilterPresentation& f1, const FilterPresentation& f2) {
  if (f1.cofinite_closed() && !f2.cofinite_closed()) return false;
  return std::all_of(f1.generators().begin(), f1.generators().end(),
                     [&](const UPSet& g) { return filter_contains(f2, g); });
}

FilterPresentation filter_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  bool cofinite = false;
  if (j.is_object()) {
    if (!j.contains("generators")) throw InputError("filter object needs a \"generators\" array");
    list = &j["generators"];
    if (j.contains("cofinite")) {
      if (!j["cofinite"].is_boolean()) throw InputError("filter field \"cofinite\" must be a boolean");
      cofinite = j["cofinite"].get<bool>();
    }
  }
  if (!list->is_array()) throw InputError("filter generators must be a JSON array");
  std::vector<UPSet> gs;
  for (const auto& item : *list) gs.push_back(UPSet::from_json(item));
  return filter_from_generators(gs, cofinite);
}

nlohmann::json to_json(const FilterPresentation& f) {
  nlohmann::json gs = nlohmann::json::array();
  for (const UPSet& g : f.generators()) gs.push_back(g.to_string());
  return {{"generators", gs}, {"cofinite", f.cofinite_closed()}};
}

}  // namespace tqu::filters
