#include "tqu/finite/entourage.hpp"

#include <algorithm>

#include "tqu/errors.hpp"
#include "tqu/finite/cover.hpp"

namespace tqu::finite {

Entourage::Entourage(unsigned n, std::vector<Subset> rows) : rows_(std::move(rows)) {
  if (n > kMaxPoints) throw InputError("ground set too large for an entourage");
  if (rows_.size() != n) throw InputError("entourage needs one row per point");
  const Subset full = Subset::full(n);
  for (unsigned x = 0; x < n; ++x) {
    if (!rows_[x].subset_of(full)) throw InputError("row " + std::to_string(x) + " escapes the ground set");
    if (!rows_[x].contains(x)) throw InputError("entourage is not reflexive at " + std::to_string(x));
  }
}

Entourage Entourage::diagonal(unsigned n) {
  std::vector<Subset> rows;
  for (unsigned x = 0; x < n; ++x) rows.push_back(Subset::singleton(x));
  return Entourage(n, std::move(rows));
}

Entourage Entourage::total(unsigned n) { return Entourage(n, std::vector<Subset>(n, Subset::full(n))); }

Subset Entourage::image(Subset a) const {
  Subset acc;
  for (unsigned x : a.elements()) {
    if (x < n()) acc |= rows_[x];
  }
  return acc;
}

Entourage Entourage::compose() const {
  std::vector<Subset> rows(n());
  for (unsigned x = 0; x < n(); ++x) rows[x] = image(rows_[x]);
  return Entourage(n(), std::move(rows));
}

bool Entourage::is_transitive() const { return compose().subset_of(*this); }

bool Entourage::subset_of(const Entourage& other) const {
  if (other.n() != n()) throw InputError("entourages live on different ground sets");
  for (unsigned x = 0; x < n(); ++x) {
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  }
  return true;
}

Entourage Entourage::intersect(const Entourage& other) const {
  if (other.n() != n()) throw InputError("entourages live on different ground sets");
  std::vector<Subset> rows(n());
  for (unsigned x = 0; x < n(); ++x) rows[x] = rows_[x] & other.rows_[x];
  return Entourage(n(), std::move(rows));
}

std::vector<Subset> Entourage::values() const {
  std::vector<Subset> v = rows_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Cover Entourage::value_cover() const { return Cover(n(), values()); }

std::string Entourage::to_string() const {
  std::string s = "[";
  for (unsigned x = 0; x < n(); ++x) {
    if (x) s += ' ';
    s += std::to_string(x) + "->" + rows_[x].to_string();
  }
  return s + "]";
}

Entourage preorder_closure(unsigned n, std::span<const Subset> rows) {
  if (rows.size() != n) throw InputError("relation has the wrong number of rows");
  std::vector<Subset> r(rows.begin(), rows.end());
  for (unsigned x = 0; x < n; ++x) r[x] |= Subset::singleton(x);
  // Warshall over bit rows.
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned x = 0; x < n; ++x) {
      if (r[x].contains(k)) r[x] |= r[k];
    }
  }
  return Entourage(n, std::move(r));
}

Entourage u_n(Subset nset, unsigned n) {
  const Subset full = Subset::full(n);
  if (!nset.subset_of(full)) throw InputError("set " + nset.to_string() + " escapes the ground set");
  std::vector<Subset> rows(n);
  for (unsigned x = 0; x < n; ++x) rows[x] = nset.contains(x) ? nset : full;
  return Entourage(n, std::move(rows));
}

}  // namespace tqu::finite
