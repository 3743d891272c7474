#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tqu::finite {

/// Largest ground set handled by the finite module.
inline constexpr unsigned kMaxPoints = 16;

/// A subset of {0..n-1} stored as a bit vector (bit i set <=> i is a member).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(unsigned n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr Subset singleton(unsigned i) { return Subset(std::uint32_t{1} << i); }
  static Subset of(std::initializer_list<unsigned> elems) {
    std::uint32_t b = 0;
    for (unsigned e : elems) b |= std::uint32_t{1} << e;
    return Subset(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(unsigned i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<unsigned> elements() const;
  std::string to_string() const;  // "{0,2,3}"

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace tqu::finite
