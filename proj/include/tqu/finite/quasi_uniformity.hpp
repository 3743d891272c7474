#pragma once

#include <vector>

#include "tqu/finite/entourage.hpp"
#include "tqu/finite/topology.hpp"

namespace tqu::finite {

/// A quasi-uniformity on a finite set, presented by a finite base.
///
/// On a finite ground set the filter generated by the base has a least member,
/// the intersection of the base. The square-root axiom then forces that
/// minimum to be a preorder, so the whole structure is the up-filter of one
/// preorder. This is why every compatible quasi-uniformity of a finite space
/// coincides with the Pervin one.
class FiniteQU {
 public:
  /// Throws InputError if the base is inconsistent in size or its minimum is
  /// not transitive.
  FiniteQU(unsigned n, std::vector<Entourage> base);

  unsigned n() const { return n_; }
  const std::vector<Entourage>& base() const { return base_; }
  const Entourage& minimum() const { return minimum_; }

  /// Filter membership: some base intersection (equivalently the minimum)
  /// lies inside u.
  bool contains(const Entourage& u) const { return minimum_.subset_of(u); }

 private:
  unsigned n_;
  std::vector<Entourage> base_;
  Entourage minimum_;
};

/// Lattice base of a topology: contains the empty and full sets, closed under
/// pairwise union and intersection, and every open set is a union of members.
class LBase {
 public:
  /// Throws InputError if any invariant fails.
  LBase(FiniteTopology topology, std::vector<Subset> members);

  const FiniteTopology& topology() const { return topology_; }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(Subset s) const;

  bool operator==(const LBase&) const = default;

 private:
  FiniteTopology topology_;
  std::vector<Subset> members_;
};

/// Base {U_N : N open}; minimum is the specialization preorder of t.
FiniteQU pervin(const FiniteTopology& t);

/// Alexandrov topology of q.minimum().
FiniteTopology induced_topology(const FiniteQU& q);

/// B(V) = {N open : U_N in V}. Throws InputError unless q induces t.
LBase b_of_v(const FiniteQU& q, const FiniteTopology& t);

/// V(B) = filter generated by {U_N : N in B}.
FiniteQU v_of_b(const LBase& b);

/// Total boundedness as containment in the Pervin quasi-uniformity.
/// Throws InputError unless q induces t.
bool is_totally_bounded(const FiniteQU& q, const FiniteTopology& t);

/// Member containment. Throws InputError if the topologies differ.
bool lbase_subset(const LBase& b1, const LBase& b2);

/// The l-base of all open sets.
LBase all_opens(const FiniteTopology& t);

}  // namespace tqu::finite
