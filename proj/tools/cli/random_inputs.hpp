#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tqu/chain/model.hpp"
#include "tqu/filters/filter.hpp"
#include "tqu/finite/cover.hpp"
#include "tqu/finite/entourage.hpp"

namespace tqu::cli {

/// Seeded source for every randomized suite. Bounded draws use modulo so a
/// seed reproduces the same inputs on every standard library.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

omega::UPSet random_upset(Random& rng, std::size_t max_prefix = 8, std::size_t max_period = 6);

/// Random family on n points, patched so its union is the ground set.
finite::Cover random_cover(Random& rng, unsigned n);

/// Reflexive transitive closure of a random relation.
finite::Entourage random_preorder(Random& rng, unsigned n);

finite::Subset random_subset(Random& rng, unsigned n);

/// A finite family inside the model's l-base.
std::vector<omega::UPSet> random_lbase_family(Random& rng, chain::Model m);

struct PileTriple {
  std::vector<omega::UPSet> beta;
  omega::UPSet a1, a2;
};

/// A1 = A2 - Z for a finite set Z of chain indices inside A2 and
/// β = {N_j : j in Z}, which makes U_β ∩ U_{A2} ≤ U_{A1} hold.
PileTriple random_pile_triple(Random& rng, chain::Model m);

/// A proper filter on one or two random generators.
filters::FilterPresentation random_filter(Random& rng);

}  // namespace tqu::cli
