#include "tqu/chain/separation.hpp"

#include <algorithm>

namespace tqu::chain {

PileBoundResult pile_bound_check(const std::vector<UPSet>& beta, const UPSet& a1, const UPSet& a2, Model m,
                                 std::uint64_t window) {
  const SymNet ub = symnet_from_family(m, beta);
  const SymNet u1 = symnet_from_cover(cover_alpha(a1, m));
  const SymNet u2 = symnet_from_cover(cover_alpha(a2, m));
  if (!symnet_leq(symnet_intersect(ub, u2), u1)) return PileBoundOk{true, 0};

  // U_β is constant on its tail, so its values all occur by start + cycle.
  std::vector<UPSet> values;
  for (std::uint64_t x = 0; x <= ub.start() + 1; ++x) {
    UPSet v = ub.value(x);
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(std::move(v));
  }
  const std::uint64_t k = values.size();

  const UPSet indices = UPSet::from(1);
  const UPSet h1 = a1 & indices;
  for (const omega::Run& pile : omega::piles(a2 & indices).piles_below(window)) {
    const std::uint64_t count = pile.length() - h1.count_in(pile.first, pile.last + 1);
    if (count > k) return PileBoundViolation{pile, count, k};
  }
  return PileBoundOk{false, k};
}

QUPresentation v_sigma(const filters::FilterPresentation& f, Model m) {
  std::vector<SymNet> nets;
  for (const UPSet& a : f.generators()) nets.push_back(symnet_from_cover(cover_alpha(a, m)));
  return qu_presentation(m, std::move(nets));
}

SeparationResult separates(const filters::FilterPresentation& f1, const filters::FilterPresentation& f2, Model) {
  for (const UPSet& a1 : f1.generators()) {
    const bool certified = std::all_of(f2.generators().begin(), f2.generators().end(),
                                       [&](const UPSet& a2) { return !omega::is_admissible(a2 - a1, a2); });
    if (certified) return Distinct{a1};
  }
  return Inconclusive{};
}

std::string to_string(const SeparationResult& r) {
  if (const auto* d = std::get_if<Distinct>(&r)) return "distinct: " + d->witness.to_string();
  return "inconclusive";
}

}  // namespace tqu::chain
