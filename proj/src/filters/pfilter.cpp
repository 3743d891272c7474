#include "tqu/filters/pfilter.hpp"

#include "tqu/errors.hpp"
#include <optional>

#include "tqu/omega/piles.hpp"

namespace tqu::filters {

namespace {

constexpr std::size_t kMaxBudgetBits = 30;

UPSet::Bits bits_of(std::uint64_t value, std::size_t length) {
  UPSet::Bits out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = (value >> i) & 1u;
  return out;
}

// Visits canonical sets within the budget until `visit` returns false.
// Finite sets come first; `tail_only` restricts to empty-prefix descriptions.
template <typename Fn>
bool for_each_candidate(const Budget& budget, bool tail_only, bool include_finite, Fn&& visit) {
  if (include_finite && !tail_only) {
    for (std::size_t len = 1; len <= budget.max_prefix; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << (len - 1)); ++v) {
        if (!visit(UPSet::from_bits(bits_of(v | (std::uint64_t{1} << (len - 1)), len), {false}))) return false;
      }
    }
  }
  const std::size_t max_p = tail_only ? 0 : budget.max_prefix;
  for (std::size_t p = 0; p <= max_p; ++p) {
    for (std::size_t q = 1; q <= budget.max_period; ++q) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << q); ++w) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << p); ++v) {
          const UPSet s = UPSet::from_bits(bits_of(v, p), bits_of(w, q));
          if (s.is_finite() || s.prefix_length() != p || s.period_length() != q) continue;
          if (!visit(s)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

PFilterResult pfilter_check(const FilterPresentation& f, const Budget& budget, bool exhaustive) {
  if (budget.max_prefix == 0 || budget.max_period == 0) throw InputError("budget bounds must be positive");
  if (budget.max_prefix + budget.max_period > kMaxBudgetBits) {
    throw ResourceError("budget prefix + period may not exceed " + std::to_string(kMaxBudgetBits));
  }
  const bool mod_finite = f.cofinite_closed();

  std::vector<UPSet> ns = f.generators();
  if (exhaustive) {
    for_each_candidate(budget, mod_finite, true, [&](const UPSet& s) {
      if (filter_contains(f, s)) ns.push_back(s);
      return true;
    });
  }

  Pass pass;
  std::optional<CounterExample> found;
  for (const UPSet& n : ns) {
    for_each_candidate(budget, mod_finite, true, [&](const UPSet& z) {
      ++pass.candidates_checked;
      if (!omega::is_admissible(z, n)) return true;
      if (filter_contains(f, n - z)) return true;
      found = CounterExample{n, z};
      return false;
    });
    if (found) return *found;
  }
  return pass;
}

std::string to_string(const PFilterResult& r) {
  if (const auto* c = std::get_if<CounterExample>(&r)) {
    return "counterexample: n=" + c->n.to_string() + " z=" + c->z.to_string();
  }
  return "pass: no counterexample within budget (" + std::to_string(std::get<Pass>(r).candidates_checked) +
         " candidates)";
}

}  // namespace tqu::filters
