#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tqu/omega/upset.hpp"

namespace tqu::omega {

/// Closed integer interval [first, last].
struct Run {
  std::uint64_t first;
  std::uint64_t last;
  std::uint64_t length() const { return last - first + 1; }
  bool operator==(const Run&) const = default;
};

/// The last pile is [start, ∞).
struct InfiniteRun {
  std::uint64_t start;
  bool operator==(const InfiniteRun&) const = default;
};

/// From `anchor` on, the runs listed in `runs` (offsets relative to the
/// anchor, all inside [0, period)) repeat with stride `period`. Position
/// anchor-1 (if any) and every anchor + k*period - 1 are non-members, so no
/// pile straddles two windows.
struct PeriodicRuns {
  std::uint64_t anchor;
  std::uint64_t period;
  std::vector<Run> runs;
  bool operator==(const PeriodicRuns&) const = default;
};

using PileTail = std::variant<std::monostate, InfiniteRun, PeriodicRuns>;

/// Maximal runs of consecutive integers inside a set, finitely presented.
struct PileDecomposition {
  std::vector<Run> finite_runs;
  PileTail tail;

  /// Every pile that starts below `limit`, with infinite piles clipped to
  /// [start, limit). Periodic piles are unrolled.
  std::vector<Run> piles_below(std::uint64_t limit) const;

  /// "[1,3] [5,6]", "infinite run from 0", "periodic runs from 0 every 2:
  /// [+0,+0]", or "no piles".
  std::string to_string() const;
  nlohmann::json to_json() const;

  bool operator==(const PileDecomposition&) const = default;
};

/// Pile decomposition; piles of the empty set is the empty decomposition.
PileDecomposition piles(const UPSet& n);

struct Admissible {
  std::uint64_t bound;  // least k with |H ∩ Z| <= k for every pile H
  bool operator==(const Admissible&) const = default;
};

struct NotAdmissible {
  InfiniteRun pile;  // the pile meeting Z infinitely often
  bool operator==(const NotAdmissible&) const = default;
};

using AdmissibilityResult = std::variant<Admissible, NotAdmissible>;

/// Decides whether |H ∩ z| is bounded over the piles H of n, returning the
/// least bound when it is. Only z ∩ n matters.
AdmissibilityResult admissibility(const UPSet& z, const UPSet& n);

inline bool is_admissible(const UPSet& z, const UPSet& n) {
  return std::holds_alternative<Admissible>(admissibility(z, n));
}

std::string to_string(const AdmissibilityResult& r);

}  // namespace tqu::omega
