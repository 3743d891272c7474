#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tqu::omega {

/// An ultimately periodic subset of the naturals: membership of 0..p-1 is
/// given by `prefix`, membership of p+i by period[i mod |period|].
///
/// Values are always canonical (primitive period, shortest prefix), so
/// structural equality is set equality. The empty set is prefix "" with
/// period "0"; the naturals are prefix "" with period "1".
class UPSet {
 public:
  using Bits = std::vector<bool>;

  /// The empty set.
  UPSet();

  /// Throws InputError on an empty period and ResourceError if the
  /// description exceeds kMaxLength bits.
  static UPSet from_bits(Bits prefix, Bits period);
  /// Bits as '0'/'1' strings, e.g. from_strings("", "10") is the evens.
  static UPSet from_strings(std::string_view prefix, std::string_view period);
  static UPSet finite(std::span<const std::uint64_t> elems);
  static UPSet finite(std::initializer_list<std::uint64_t> elems);
  static UPSet naturals();
  /// {start, start+1, ...}
  static UPSet from(std::uint64_t start);
  /// {0, ..., count-1}
  static UPSet below(std::uint64_t count);
  /// {offset + k * step : k >= 0}, step >= 1.
  static UPSet progression(std::uint64_t offset, std::uint64_t step);

  static constexpr std::size_t kMaxLength = std::size_t{1} << 20;

  bool contains(std::uint64_t i) const;

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }
  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t period_length() const { return period_.size(); }

  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  std::optional<std::uint64_t> min_element() const;
  /// Largest element of a finite nonempty set.
  std::optional<std::uint64_t> max_element() const;
  /// Elements of a finite set in increasing order; throws InputError otherwise.
  std::vector<std::uint64_t> elements() const;
  /// |S ∩ [lo, hi)|
  std::uint64_t count_in(std::uint64_t lo, std::uint64_t hi) const;

  UPSet complement() const;
  bool subset_of(const UPSet& other) const;
  /// this - other is finite (containment modulo finite sets).
  bool almost_subset_of(const UPSet& other) const;

  friend UPSet operator|(const UPSet& a, const UPSet& b);
  friend UPSet operator&(const UPSet& a, const UPSet& b);
  friend UPSet operator-(const UPSet& a, const UPSet& b);
  friend bool operator==(const UPSet&, const UPSet&) = default;
  /// Arbitrary but total order (by canonical description), for containers.
  friend bool operator<(const UPSet& a, const UPSet& b);

  /// "fin{1,2,3}", "fin{}" for finite sets, "up(prefix=...,period=...)" otherwise.
  std::string to_string() const;
  /// Accepts both grammar forms. Throws InputError on malformed text.
  static UPSet parse(std::string_view text);

  nlohmann::json to_json() const;  // {"prefix":"..","period":".."}
  static UPSet from_json(const nlohmann::json& j);

 private:
  UPSet(Bits prefix, Bits period);
  void canonicalize();

  Bits prefix_;
  Bits period_;
};

enum class BoolOp { unite, intersect, difference, complement };

/// Dispatches to the set operators; `b` is ignored for complement.
UPSet bool_op(const UPSet& a, const UPSet& b, BoolOp op);

std::string bits_to_string(const UPSet::Bits& bits);

}  // namespace tqu::omega
