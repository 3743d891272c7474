#include "random_inputs.hpp"

#include "tqu/errors.hpp"

namespace tqu::cli {

using omega::UPSet;

UPSet random_upset(Random& rng, std::size_t max_prefix, std::size_t max_period) {
  UPSet::Bits prefix(rng.below(max_prefix + 1)), period(1 + rng.below(max_period));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = rng.coin();
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = rng.coin();
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

finite::Subset random_subset(Random& rng, unsigned n) {
  return finite::Subset(static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)));
}

finite::Cover random_cover(Random& rng, unsigned n) {
  std::vector<finite::Subset> sets;
  const auto count = 1 + rng.below(5);
  finite::Subset covered;
  for (std::uint64_t i = 0; i < count; ++i) {
    sets.push_back(random_subset(rng, n));
    covered |= sets.back();
  }
  const finite::Subset missing = finite::Subset::full(n) - covered;
  if (!missing.empty()) sets.push_back(missing);
  return finite::Cover(n, std::move(sets));
}

finite::Entourage random_preorder(Random& rng, unsigned n) {
  std::vector<finite::Subset> rows;
  for (unsigned x = 0; x < n; ++x) {
    finite::Subset row = finite::Subset::singleton(x);
    for (unsigned y = 0; y < n; ++y) {
      if (rng.below(4) == 0) row |= finite::Subset::singleton(y);
    }
    rows.push_back(row);
  }
  return finite::preorder_closure(n, rows);
}

std::vector<UPSet> random_lbase_family(Random& rng, chain::Model m) {
  std::vector<UPSet> beta;
  const auto count = rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (m == chain::Model::increasing) {
      if (rng.below(5) == 0) {
        beta.push_back(UPSet::naturals());
        continue;
      }
      std::vector<std::uint64_t> elems;
      for (std::uint64_t e = 0; e < 10; ++e) {
        if (rng.below(3) == 0) elems.push_back(e);
      }
      beta.push_back(UPSet::finite(elems));
    } else {
      beta.push_back(rng.below(6) == 0 ? UPSet() : UPSet::from(rng.below(11)));
    }
  }
  return beta;
}

PileTriple random_pile_triple(Random& rng, chain::Model m) {
  const auto cm = chain::model(m);
  PileTriple t;
  t.a2 = random_upset(rng);
  std::vector<std::uint64_t> z;
  for (std::uint64_t j = 1; j < 16; ++j) {
    if (t.a2.contains(j) && rng.below(3) == 0) {
      z.push_back(j);
      t.beta.push_back(cm.chain_element(j));
    }
  }
  t.a1 = t.a2 - UPSet::finite(z);
  return t;
}

filters::FilterPresentation random_filter(Random& rng) {
  for (;;) {
    std::vector<UPSet> gs{random_upset(rng, 6, 4)};
    if (rng.coin()) gs.push_back(random_upset(rng, 6, 4));
    try {
      return filters::filter_from_generators(gs);
    } catch (const ImproperFilterError&) {
    }
  }
}

}  // namespace tqu::cli
