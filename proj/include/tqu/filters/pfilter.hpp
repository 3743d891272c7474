#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "tqu/filters/filter.hpp"

namespace tqu::filters {

/// Bounds on the candidate sets Z: prefix length and period length.
struct Budget {
  std::size_t max_prefix = 8;
  std::size_t max_period = 4;
};

/// No counterexample among candidates within the budget.
struct Pass {
  std::size_t candidates_checked = 0;
  bool operator==(const Pass&) const = default;
};

/// Z is admissible for N, N is in the filter, but N - Z is not.
struct CounterExample {
  UPSet n;
  UPSet z;
  bool operator==(const CounterExample&) const = default;
};

using PFilterResult = std::variant<Pass, CounterExample>;

/// Searches for a violation of "N ∈ f and Z admissible for N imply N - Z ∈ f".
///
/// N ranges over the generators, or with `exhaustive` over every member of f
/// within the budget. Candidates Z are visited finite sets first (shorter
/// descriptions first), then infinite sets by prefix and period length. For
/// cofinite-closed filters both N and Z are taken up to finite modification,
/// which changes neither admissibility nor membership of N - Z.
///
/// Throws InputError if a budget bound is zero.
PFilterResult pfilter_check(const FilterPresentation& f, const Budget& budget, bool exhaustive = false);

std::string to_string(const PFilterResult& r);

}  // namespace tqu::filters
