#include "tqu/finite/quasi_uniformity.hpp"

#include <algorithm>

#include "tqu/errors.hpp"

namespace tqu::finite {

namespace {

Entourage intersect_all(unsigned n, const std::vector<Entourage>& base) {
  Entourage acc = Entourage::total(n);
  for (const Entourage& u : base) {
    if (u.n() != n) throw InputError("base member lives on a different ground set");
    acc = acc.intersect(u);
  }
  return acc;
}

void require_compatible(const FiniteQU& q, const FiniteTopology& t) {
  if (q.n() != t.n() || induced_topology(q) != t) {
    throw InputError("quasi-uniformity does not induce the given topology");
  }
}

}  // namespace

FiniteQU::FiniteQU(unsigned n, std::vector<Entourage> base)
    : n_(n), base_(std::move(base)), minimum_(intersect_all(n, base_)) {
  if (!minimum_.is_transitive()) {
    throw InputError("base minimum is not transitive, so the filter has no square roots");
  }
}

LBase::LBase(FiniteTopology topology, std::vector<Subset> members)
    : topology_(std::move(topology)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const Subset full = topology_.ground();
  if (!contains(Subset{}) || !contains(full)) throw InputError("l-base must contain the empty and full sets");
  for (Subset m : members_) {
    if (!topology_.is_open(m)) throw InputError("l-base member " + m.to_string() + " is not open");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (!contains(members_[i] | members_[j]) || !contains(members_[i] & members_[j])) {
        throw InputError("l-base is not closed under union and intersection");
      }
    }
  }
  for (Subset o : topology_.opens()) {
    Subset u;
    for (Subset m : members_) {
      if (m.subset_of(o)) u |= m;
    }
    if (u != o) throw InputError("open set " + o.to_string() + " is not a union of l-base members");
  }
}

bool LBase::contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

FiniteQU pervin(const FiniteTopology& t) {
  std::vector<Entourage> base;
  base.reserve(t.opens().size());
  for (Subset o : t.opens()) base.push_back(u_n(o, t.n()));
  return FiniteQU(t.n(), std::move(base));
}

FiniteTopology induced_topology(const FiniteQU& q) {
  return alexandrov_topology(q.n(), q.minimum().rows());
}

LBase b_of_v(const FiniteQU& q, const FiniteTopology& t) {
  require_compatible(q, t);
  std::vector<Subset> members;
  for (Subset o : t.opens()) {
    if (q.contains(u_n(o, t.n()))) members.push_back(o);
  }
  return LBase(t, std::move(members));
}

FiniteQU v_of_b(const LBase& b) {
  std::vector<Entourage> base;
  for (Subset m : b.members()) base.push_back(u_n(m, b.topology().n()));
  return FiniteQU(b.topology().n(), std::move(base));
}

bool is_totally_bounded(const FiniteQU& q, const FiniteTopology& t) {
  require_compatible(q, t);
  return pervin(t).minimum().subset_of(q.minimum());
}

bool lbase_subset(const LBase& b1, const LBase& b2) {
  if (b1.topology() != b2.topology()) throw InputError("l-bases belong to different topologies");
  return std::includes(b2.members().begin(), b2.members().end(), b1.members().begin(), b1.members().end());
}

LBase all_opens(const FiniteTopology& t) { return LBase(t, t.opens()); }

}  // namespace tqu::finite
