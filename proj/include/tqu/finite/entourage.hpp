#pragma once

#include <span>
#include <string>
#include <vector>

#include "tqu/finite/subset.hpp"

namespace tqu::finite {

class Cover;

/// Reflexive binary relation on {0..n-1}; row x is the value set U(x).
class Entourage {
 public:
  /// Throws InputError if a row escapes the ground set or misses its own index.
  Entourage(unsigned n, std::vector<Subset> rows);

  static Entourage diagonal(unsigned n);
  static Entourage total(unsigned n);

  unsigned n() const { return static_cast<unsigned>(rows_.size()); }
  Subset operator()(unsigned x) const { return rows_[x]; }
  const std::vector<Subset>& rows() const { return rows_; }

  /// U(A) = union of U(x) over x in A.
  Subset image(Subset a) const;

  bool is_transitive() const;
  bool subset_of(const Entourage& other) const;
  Entourage intersect(const Entourage& other) const;
  /// U o U, i.e. row x = U(U(x)).
  Entourage compose() const;

  /// Distinct value sets {U(x) : x}, sorted.
  std::vector<Subset> values() const;
  /// The value sets viewed as a cover of the ground set.
  Cover value_cover() const;

  bool operator==(const Entourage&) const = default;
  std::string to_string() const;

 private:
  std::vector<Subset> rows_;
};

/// Reflexive transitive closure of an arbitrary relation given by rows.
Entourage preorder_closure(unsigned n, std::span<const Subset> rows);

/// U_N = (N x N) u ((X - N) x X).
Entourage u_n(Subset nset, unsigned n);

}  // namespace tqu::finite
