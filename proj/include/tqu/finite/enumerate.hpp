#pragma once

#include <functional>
#include <vector>

#include "tqu/finite/quasi_uniformity.hpp"
#include "tqu/finite/topology.hpp"

namespace tqu::finite {

struct EnumerationLimits {
  unsigned max_points = 5;
};

/// Hard ceiling for either enumerator regardless of configured limits.
inline constexpr unsigned kEnumerationCeiling = 6;

/// Visits every topology on n labelled points exactly once. Topologies are
/// produced as Alexandrov topologies of the reflexive transitive relations on
/// {0..n-1}. Throws ResourceError when n exceeds the limit.
void for_each_topology(unsigned n, const std::function<void(const FiniteTopology&)>& visit,
                       EnumerationLimits limits = {});

std::vector<FiniteTopology> enumerate_topologies(unsigned n, EnumerationLimits limits = {});

/// Independent enumerator: explores open-set families directly, starting from
/// the indiscrete topology and adjoining one subset at a time. Result sorted by
/// open-set list.
std::vector<FiniteTopology> enumerate_topologies_by_closure(unsigned n,
                                                            EnumerationLimits limits = {});

/// Every l-base of t, by brute force over subfamilies of the opens.
/// Throws ResourceError if t has more than 20 open sets.
std::vector<LBase> enumerate_lbases(const FiniteTopology& t);

}  // namespace tqu::finite
