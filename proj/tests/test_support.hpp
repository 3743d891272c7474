#pragma once

#include <cstdint>
#include <random>

namespace tqu::testing {

// Fixed-seed engine; bounded draws use modulo so the sequence is identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 17) & 1u; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tqu::testing
