#include "tqu/finite/topology.hpp"

#include <algorithm>

#include "tqu/errors.hpp"
#include "tqu/finite/entourage.hpp"

namespace tqu::finite {

namespace {

void check_size(unsigned n) {
  if (n > kMaxPoints) {
    throw InputError("ground set of " + std::to_string(n) + " points exceeds the limit of " +
                     std::to_string(kMaxPoints));
  }
}

}  // namespace

FiniteTopology::FiniteTopology(unsigned n, std::vector<Subset> opens) : n_(n), opens_(std::move(opens)) {
  check_size(n);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  const Subset full = Subset::full(n);
  for (Subset s : opens_) {
    if (!s.subset_of(full)) throw InputError("open set " + s.to_string() + " escapes the ground set");
  }
  if (!is_open(Subset{}) || !is_open(full)) throw InputError("topology must contain the empty and full sets");
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j]) || !is_open(opens_[i] & opens_[j])) {
        throw InputError("family is not closed under union and intersection");
      }
    }
  }
}

bool FiniteTopology::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

Subset FiniteTopology::minimal_neighborhood(unsigned x) const {
  Subset acc = ground();
  for (Subset s : opens_) {
    if (s.contains(x)) acc &= s;
  }
  return acc;
}

Entourage FiniteTopology::specialization() const {
  std::vector<Subset> rows(n_);
  for (unsigned x = 0; x < n_; ++x) rows[x] = minimal_neighborhood(x);
  return Entourage(n_, std::move(rows));
}

std::string FiniteTopology::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if (i) s += ',';
    s += opens_[i].to_string();
  }
  return s + "}";
}

FiniteTopology alexandrov_topology(unsigned n, std::span<const Subset> rows) {
  check_size(n);
  if (rows.size() != n) throw InputError("relation has the wrong number of rows");
  std::vector<Subset> opens;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    const Subset s(bits);
    bool open = true;
    for (std::uint32_t b = bits; b != 0 && open; b &= b - 1) {
      open = rows[static_cast<unsigned>(std::countr_zero(b))].subset_of(s);
    }
    if (open) opens.push_back(s);
  }
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology make_topology(unsigned n, std::span<const Subset> generators) {
  check_size(n);
  const Subset full = Subset::full(n);
  for (Subset g : generators) {
    if (!g.subset_of(full)) throw InputError("generator " + g.to_string() + " escapes the ground set");
  }
  // Finite intersections of generators give minimal neighbourhoods; unions of
  // those are exactly the Alexandrov opens.
  std::vector<Subset> rows(n, full);
  for (unsigned x = 0; x < n; ++x) {
    for (Subset g : generators) {
      if (g.contains(x)) rows[x] &= g;
    }
  }
  return alexandrov_topology(n, rows);
}

FiniteTopology discrete_topology(unsigned n) {
  std::vector<Subset> rows;
  for (unsigned x = 0; x < n; ++x) rows.push_back(Subset::singleton(x));
  return alexandrov_topology(n, rows);
}

FiniteTopology indiscrete_topology(unsigned n) {
  check_size(n);
  return FiniteTopology(n, {Subset{}, Subset::full(n)});
}

}  // namespace tqu::finite
