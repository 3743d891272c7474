#pragma once

#include <span>
#include <string>
#include <vector>

#include "tqu/finite/subset.hpp"

namespace tqu::finite {

class Entourage;

/// A topology on the finite ground set {0..n-1}: the family of open sets,
/// kept sorted by bit pattern so that equal topologies compare equal.
class FiniteTopology {
 public:
  /// Validating constructor; throws InputError unless `opens` contains the
  /// empty and full sets and is closed under union and intersection.
  FiniteTopology(unsigned n, std::vector<Subset> opens);

  unsigned n() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const std::vector<Subset>& opens() const { return opens_; }
  bool is_open(Subset s) const;

  /// Smallest open set containing x (the intersection of all open
  /// neighbourhoods of x).
  Subset minimal_neighborhood(unsigned x) const;

  /// Row x is the minimal open neighbourhood of x.
  Entourage specialization() const;

  bool operator==(const FiniteTopology&) const = default;

  std::string to_string() const;

 private:
  unsigned n_;
  std::vector<Subset> opens_;
};

/// Smallest topology containing `generators`. Throws InputError when a
/// generator reaches outside {0..n-1} or n exceeds kMaxPoints.
FiniteTopology make_topology(unsigned n, std::span<const Subset> generators);

/// Topology whose opens are the sets N with rows(x) subset of N for every x in N.
/// `rows` must describe a reflexive relation; transitivity is not required
/// (the result is the Alexandrov topology of its transitive closure).
FiniteTopology alexandrov_topology(unsigned n, std::span<const Subset> rows);

FiniteTopology discrete_topology(unsigned n);
FiniteTopology indiscrete_topology(unsigned n);

}  // namespace tqu::finite
