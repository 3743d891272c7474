#pragma once

#include <vector>

#include <json.hpp>

#include "tqu/omega/upset.hpp"

namespace tqu::filters {

using omega::UPSet;

/// A filter on ℕ restricted to the ultimately periodic fragment, given by a
/// finite generating family closed under pairwise intersection.
///
/// Unflagged presentations denote the upward closure of the generators, so
/// they are always principal (the least generator generates). With
/// `cofinite_closed` set, membership is taken modulo finite sets: M belongs
/// when g - M is finite for some generator g. The Fréchet filter is the
/// flagged presentation with the single generator ℕ.
class FilterPresentation {
 public:
  /// The trivial filter {ℕ}.
  FilterPresentation();

  const std::vector<UPSet>& generators() const { return generators_; }
  bool cofinite_closed() const { return cofinite_closed_; }

  friend bool operator==(const FilterPresentation&, const FilterPresentation&) = default;

 private:
  friend FilterPresentation filter_from_generators(const std::vector<UPSet>& gs, bool cofinite_closed);
  std::vector<UPSet> generators_;
  bool cofinite_closed_ = false;
};

/// Closes `gs` under pairwise intersection (duplicates removed, sorted). An
/// empty list gives the trivial filter. Throws ImproperFilterError when some
/// intersection is empty, or merely finite for a cofinite-closed presentation,
/// and ResourceError if the closure exceeds kMaxGenerators.
FilterPresentation filter_from_generators(const std::vector<UPSet>& gs, bool cofinite_closed = false);

inline constexpr std::size_t kMaxGenerators = 4096;

FilterPresentation principal_filter(const UPSet& g);
/// Generators ℕ - {0..i} for i < count, closed under finite modification.
FilterPresentation frechet_filter(std::size_t count = 5);

bool filter_contains(const FilterPresentation& f, const UPSet& m);
/// f1 ⊆ f2 as families of sets.
bool filter_leq(const FilterPresentation& f1, const FilterPresentation& f2);

/// Accepts a JSON array of set strings (or {"prefix","period"} objects), or
/// an object {"generators": [...], "cofinite": bool}.
FilterPresentation filter_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FilterPresentation& f);

}  // namespace tqu::filters
