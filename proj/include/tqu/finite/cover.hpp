#pragma once

#include <string>
#include <vector>

#include "tqu/finite/entourage.hpp"
#include "tqu/finite/subset.hpp"
#include "tqu/finite/topology.hpp"

namespace tqu::finite {

/// A family of subsets of {0..n-1} whose union is the whole ground set.
/// The empty set is accepted as a member.
class Cover {
 public:
  Cover(unsigned n, std::vector<Subset> sets);

  unsigned n() const { return n_; }
  const std::vector<Subset>& sets() const { return sets_; }

  std::string to_string() const;

 private:
  unsigned n_;
  std::vector<Subset> sets_;
};

/// True iff for every x the intersection of the members containing x is
/// open. Throws InputError if a member is not open in `t` or the ground sets
/// differ.
bool is_interior_preserving(const FiniteTopology& t, const Cover& c);

/// U(x) = intersection of {N in c : x in N}. Always reflexive and transitive.
Entourage neighbornet_from_cover(const Cover& c);

}  // namespace tqu::finite
