#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqu/omega/upset.hpp"

namespace tqu::chain {

using omega::UPSet;

/// The two countable spaces on ℕ used by the chain constructions.
///
/// increasing ("D1"): discrete topology, l-base B = finite sets ∪ {ℕ}, chain
/// N_i = {0..i-1} for i >= 1 with union ℕ.
/// decreasing ("D2"): topology and l-base {∅} ∪ {N_i}, N_i = {i, i+1, ...},
/// N_0 = ℕ, with intersection ∅.
enum class Model { increasing, decreasing };

std::string to_string(Model m);
/// "D1" or "D2"; throws InputError otherwise.
Model parse_model(std::string_view s);

struct CountableModel {
  Model kind;

  /// N_i. For the increasing model i must be at least 1.
  UPSet chain_element(std::uint64_t i) const;
  /// Union (increasing) or intersection (decreasing) of the chain.
  UPSet chain_limit() const;
  bool is_open(const UPSet& s) const;
  bool in_lbase(const UPSet& s) const;
  /// The index j with s = N_j, if any (N_0 = ℕ counts for the decreasing model).
  std::optional<std::uint64_t> chain_index(const UPSet& s) const;
};

CountableModel model(Model kind);

/// α_A: the whole space and N_i for every chain index i >= 1 outside A
/// (plus ∅ in the decreasing model, which never changes a neighborhood).
struct SymCover {
  Model model;
  UPSet excluded;  // A

  /// Members N_i with i < limit, after the constant members.
  std::vector<UPSet> members_below(std::uint64_t limit) const;
};

SymCover cover_alpha(const UPSet& a, Model m);

}  // namespace tqu::chain
