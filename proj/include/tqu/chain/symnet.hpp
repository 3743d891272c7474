#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tqu/chain/model.hpp"

namespace tqu::chain {

/// Level standing for the whole space in the increasing model.
inline constexpr std::uint64_t kTop = std::numeric_limits<std::uint64_t>::max();

/// One residue class of a periodic level map. Along the class the level
/// either stays at `level` or grows by one per point (advancing).
struct ChainStep {
  std::uint64_t level;
  bool advancing;
  bool operator==(const ChainStep&) const = default;
};

/// From the net's start P on, the point P + kL + r has level
/// cycle[r].level + (cycle[r].advancing ? kL : 0), where L = |cycle|.
struct ChainTail {
  std::vector<ChainStep> cycle;
  bool operator==(const ChainTail&) const = default;
};

/// value(x) = {x}
struct DiagonalTail {
  bool operator==(const DiagonalTail&) const = default;
};

/// value(x) = ℕ
struct TotalTail {
  bool operator==(const TotalTail&) const = default;
};

using NetTail = std::variant<ChainTail, DiagonalTail, TotalTail>;

/// A neighbornet on ℕ: explicit values on [0, P), then a symbolic tail.
///
/// Chain levels name chain elements of the model: level j is N_j, and kTop
/// (increasing model only) is ℕ. Construction checks reflexivity everywhere
/// and canonicalizes: minimal cycle, shortest exception list, and tails that
/// are constantly ℕ become TotalTail. Distinct descriptions of the same net
/// may still differ in how exceptions are split off; compare with
/// symnet_equal.
class SymNet {
 public:
  /// Throws InputError if some value misses its own point or a level is out
  /// of range, ResourceError beyond kMaxExceptions explicit values.
  SymNet(Model model, std::vector<UPSet> exceptions, NetTail tail);

  static constexpr std::size_t kMaxExceptions = std::size_t{1} << 16;

  Model model() const { return model_; }
  const std::vector<UPSet>& exceptions() const { return exceptions_; }
  const NetTail& tail() const { return tail_; }
  std::uint64_t start() const { return exceptions_.size(); }

  UPSet value(std::uint64_t x) const;
  /// Level at a tail point of a chain or total tail; nullopt elsewhere.
  std::optional<std::uint64_t> level(std::uint64_t x) const;

  friend bool operator==(const SymNet&, const SymNet&) = default;

 private:
  void canonicalize();

  Model model_;
  std::vector<UPSet> exceptions_;
  NetTail tail_;
};

/// U_A(x) = ∩{M ∈ α_A : x ∈ M}.
SymNet symnet_from_cover(const SymCover& c);
/// U_β(x) = ∩{b ∈ β : x ∈ b} for a finite family inside the model's l-base;
/// throws InputError on members outside it.
SymNet symnet_from_family(Model m, const std::vector<UPSet>& beta);
SymNet diagonal_net(Model m);
SymNet total_net(Model m);

/// Pointwise intersection; throws InputError across models.
SymNet symnet_intersect(const SymNet& u1, const SymNet& u2);
/// value(u1, x) ⊆ value(u2, x) for every x; throws InputError across models.
bool symnet_leq(const SymNet& u1, const SymNet& u2);
bool symnet_equal(const SymNet& u1, const SymNet& u2);

/// Points [0, H) on which every pointwise comparison of the given nets is
/// decided: past H each residue class keeps a fixed ordering.
std::uint64_t decision_window(const std::vector<const SymNet*>& nets);

/// U∘U ⊆ U, checked over decision_window.
bool is_transitive(const SymNet& u);

struct SetDescriptor {
  enum class Kind { chain_element, whole, explicit_set };
  Kind kind;
  std::uint64_t index = 0;  // for chain_element
  UPSet set;
  bool operator==(const SetDescriptor&) const = default;
  std::string to_string() const;
};

SetDescriptor describe(Model m, const UPSet& s);

/// U(s) = ⋃_{x ∈ s} value(x).
SetDescriptor symnet_image(const SymNet& u, const UPSet& s);

/// The chain indices used as levels (exceptions must be chain elements);
/// throws InputError otherwise. For a net U_A this is ℕ - A on indices >= 1
/// that are actually reached.
UPSet value_levels(const SymNet& u);

nlohmann::json to_json(const SymNet& u);
SymNet symnet_from_json(const nlohmann::json& j);

}  // namespace tqu::chain
