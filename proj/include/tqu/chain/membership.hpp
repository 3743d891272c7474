#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tqu/chain/symnet.hpp"
#include "tqu/finite/quasi_uniformity.hpp"

namespace tqu::chain {

/// increasing model: value(start + k*stride) ≠ ℕ for every k, while each U_β
/// is ℕ off the finite set ⋃β.
struct CofinalNonTop {
  std::uint64_t start, stride;
  bool operator==(const CofinalNonTop&) const = default;
};

/// decreasing model: the level grows by `stride` along start + k*stride, while
/// each U_β contains N_M at every point.
struct UnboundedLevels {
  std::uint64_t start, stride;
  bool operator==(const UnboundedLevels&) const = default;
};

/// decreasing model: value(x) does not contain N_x, which every U_β(x) contains.
struct PointFailure {
  std::uint64_t x;
  bool operator==(const PointFailure&) const = default;
};

using Certificate = std::variant<CofinalNonTop, UnboundedLevels, PointFailure>;

struct Member {
  std::vector<UPSet> beta;  // finite family inside B with U_β ≤ u
  bool operator==(const Member&) const = default;
};

struct NonMember {
  Certificate certificate;
  bool operator==(const NonMember&) const = default;
};

using VDeltaResult = std::variant<Member, NonMember>;

/// Decides u ∈ V_δ, the quasi-uniformity generated by {U_β : β ⊆ B finite}.
/// Throws InputError if u is not transitive or belongs to another model.
VDeltaResult in_vdelta(const SymNet& u, Model m);

/// Re-checks a certificate against u on `samples` points of its progression.
bool replay(const SymNet& u, const Certificate& c, std::uint64_t samples = 64);

std::string to_string(const VDeltaResult& r);

/// fil{V_δ, extra}: the quasi-uniformity generated by V_δ and finitely many
/// transitive nets, kept closed under intersection.
struct QUPresentation {
  Model model;
  bool includes_vdelta = true;
  std::vector<SymNet> extra;
};

inline constexpr std::size_t kMaxExtraNets = 256;

/// Validates model and transitivity of every net (InputError otherwise) and
/// closes the list under pairwise intersection, dropping duplicates.
QUPresentation qu_presentation(Model m, std::vector<SymNet> nets);

struct InClass {
  bool operator==(const InClass&) const = default;
};

/// extra[net] maps `subset` onto `image`, which is not in B.
struct NotInClass {
  std::size_t net;
  UPSet subset;
  UPSet image;
  bool operator==(const NotInClass&) const = default;
};

using ClassResult = std::variant<InClass, NotInClass>;

/// Whether the presentation lies in π(δ): every image U(A) of every extra net
/// belongs to B. V_δ itself always qualifies.
ClassResult pi_delta_membership(const QUPresentation& q);

/// N_i ⊆ N_{i+1} strictly with ⋃N_i ∈ B.
struct Condition1 {
  CountableModel chain;
};
/// N_{i+1} ⊆ N_i strictly with ⋂N_i ∈ B.
struct Condition2 {
  CountableModel chain;
};
struct Neither {};

using T1Condition = std::variant<Condition1, Condition2, Neither>;

T1Condition t1_condition(Model m);
/// A finite l-base has no infinite strictly monotone chain.
T1Condition t1_condition(const finite::LBase& b);

/// fil{V_δ, U_α} with α the full chain cover; its net is transitive, lies in
/// π(δ) and is not in V_δ.
QUPresentation t1_construct(Model m);
/// Always throws UnsupportedError.
QUPresentation t1_construct(const finite::LBase& b);

}  // namespace tqu::chain
