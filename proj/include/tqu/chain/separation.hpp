#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tqu/chain/membership.hpp"
#include "tqu/filters/filter.hpp"
#include "tqu/omega/piles.hpp"

namespace tqu::chain {

struct PileBoundOk {
  bool vacuous = false;  // U_β ∩ U_{A2} ≤ U_{A1} failed, nothing was checked
  std::uint64_t k = 0;   // number of distinct values of U_β
  bool operator==(const PileBoundOk&) const = default;
};

struct PileBoundViolation {
  omega::Run pile;  // clipped to the window for an infinite pile
  std::uint64_t count = 0;  // |H - A1|
  std::uint64_t k = 0;
  bool operator==(const PileBoundViolation&) const = default;
};

using PileBoundResult = std::variant<PileBoundOk, PileBoundViolation>;

/// When U_β ∩ U_{A2} ≤ U_{A1}, every pile H of A2 (chain indices only, piles
/// starting below `window`) satisfies |H - A1| <= k.
PileBoundResult pile_bound_check(const std::vector<UPSet>& beta, const UPSet& a1, const UPSet& a2, Model m,
                                 std::uint64_t window);

/// fil{V_δ, U_A : A a generator of f}.
QUPresentation v_sigma(const filters::FilterPresentation& f, Model m);

struct Distinct {
  UPSet witness;  // a generator A1 of f1 with U_{A1} outside V_{f2}
  bool operator==(const Distinct&) const = default;
};

struct Inconclusive {
  bool operator==(const Inconclusive&) const = default;
};

using SeparationResult = std::variant<Distinct, Inconclusive>;

/// Looks for a generator A1 of f1 such that A2 - A1 is not admissible for A2
/// for every generator A2 of f2. Such an A1 separates V_{f1} from V_{f2}.
SeparationResult separates(const filters::FilterPresentation& f1, const filters::FilterPresentation& f2, Model m);

std::string to_string(const SeparationResult& r);

}  // namespace tqu::chain
