#pragma once

// Brute-force evaluations of the chain constructions on finite windows,
// written against the definitions rather than the symbolic tails.

#include <cstdint>
#include <vector>

#include "test_support.hpp"
#include "tqu/chain/symnet.hpp"

namespace tqu::testing {

using Bits = std::vector<bool>;

inline Bits window_bits(const omega::UPSet& s, std::uint64_t width) {
  Bits out(width);
  for (std::uint64_t i = 0; i < width; ++i) out[i] = s.contains(i);
  return out;
}

inline bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline Bits chain_member_bits(chain::Model m, std::uint64_t i, std::uint64_t width) {
  Bits out(width);
  for (std::uint64_t j = 0; j < width; ++j) out[j] = m == chain::Model::increasing ? j < i : j >= i;
  return out;
}

/// ∩{M ∈ α_A : x ∈ M} over cover indices below `indices`, restricted to [0, width).
inline Bits cover_value_oracle(chain::Model m, const omega::UPSet& a, std::uint64_t x, std::uint64_t width,
                               std::uint64_t indices) {
  Bits out(width, true);
  for (std::uint64_t i = 1; i < indices; ++i) {
    if (a.contains(i)) continue;
    const bool holds_x = m == chain::Model::increasing ? x < i : x >= i;
    if (!holds_x) continue;
    const Bits member = chain_member_bits(m, i, width);
    for (std::uint64_t j = 0; j < width; ++j) out[j] = out[j] && member[j];
  }
  return out;
}

/// ∩{b ∈ β : x ∈ b} restricted to [0, width).
inline Bits family_value_oracle(const std::vector<omega::UPSet>& beta, std::uint64_t x, std::uint64_t width) {
  Bits out(width, true);
  for (const auto& b : beta) {
    if (!b.contains(x)) continue;
    for (std::uint64_t j = 0; j < width; ++j) out[j] = out[j] && b.contains(j);
  }
  return out;
}

inline omega::UPSet random_upset(Rng& rng, std::size_t max_prefix = 8, std::size_t max_period = 6) {
  omega::UPSet::Bits prefix(rng.below(max_prefix + 1)), period(1 + rng.below(max_period));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = rng.coin();
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = rng.coin();
  return omega::UPSet::from_bits(prefix, period);
}

/// A finite family inside the model's l-base.
inline std::vector<omega::UPSet> random_beta(Rng& rng, chain::Model m) {
  std::vector<omega::UPSet> beta;
  const auto count = rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (m == chain::Model::increasing) {
      if (rng.below(5) == 0) {
        beta.push_back(omega::UPSet::naturals());
        continue;
      }
      std::vector<std::uint64_t> elems;
      for (std::uint64_t e = 0; e < 10; ++e) {
        if (rng.below(3) == 0) elems.push_back(e);
      }
      beta.push_back(omega::UPSet::finite(elems));
    } else {
      beta.push_back(rng.below(6) == 0 ? omega::UPSet() : omega::UPSet::from(rng.below(11)));
    }
  }
  return beta;
}

}  // namespace tqu::testing
