#include "tqu/chain/model.hpp"

#include "tqu/errors.hpp"

namespace tqu::chain {

std::string to_string(Model m) { return m == Model::increasing ? "D1" : "D2"; }

Model parse_model(std::string_view s) {
  if (s == "D1") return Model::increasing;
  if (s == "D2") return Model::decreasing;
  throw InputError("unknown model '" + std::string(s) + "' (expected D1 or D2)");
}

CountableModel model(Model kind) { return CountableModel{kind}; }

UPSet CountableModel::chain_element(std::uint64_t i) const {
  if (kind == Model::increasing) {
    if (i == 0) throw InputError("chain indices of D1 start at 1");
    return UPSet::below(i);
  }
  return UPSet::from(i);
}

UPSet CountableModel::chain_limit() const { return kind == Model::increasing ? UPSet::naturals() : UPSet(); }

bool CountableModel::is_open(const UPSet& s) const { return kind == Model::increasing || in_lbase(s); }

bool CountableModel::in_lbase(const UPSet& s) const {
  if (kind == Model::increasing) return s.is_finite() || s == UPSet::naturals();
  return s.is_empty() || chain_index(s).has_value();
}

std::optional<std::uint64_t> CountableModel::chain_index(const UPSet& s) const {
  if (kind == Model::increasing) {
    if (!s.is_finite() || s.is_empty()) return std::nullopt;
    const std::uint64_t j = *s.max_element() + 1;
    return s == UPSet::below(j) ? std::optional(j) : std::nullopt;
  }
  if (!s.is_cofinite()) return std::nullopt;
  const std::uint64_t j = *s.min_element();
  return s == UPSet::from(j) ? std::optional(j) : std::nullopt;
}

std::vector<UPSet> SymCover::members_below(std::uint64_t limit) const {
  const CountableModel m{model};
  std::vector<UPSet> out{UPSet::naturals()};
  if (model == Model::decreasing) out.push_back(UPSet());
  for (std::uint64_t i = 1; i < limit; ++i) {
    if (!excluded.contains(i)) out.push_back(m.chain_element(i));
  }
  return out;
}

SymCover cover_alpha(const UPSet& a, Model m) { return SymCover{m, a}; }

}  // namespace tqu::chain
