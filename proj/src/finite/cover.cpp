#include "tqu/finite/cover.hpp"

#include "tqu/errors.hpp"

namespace tqu::finite {

Cover::Cover(unsigned n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  if (n > kMaxPoints) throw InputError("ground set too large for a cover");
  const Subset full = Subset::full(n);
  Subset covered;
  for (Subset s : sets_) {
    if (!s.subset_of(full)) throw InputError("cover member " + s.to_string() + " escapes the ground set");
    covered |= s;
  }
  if (covered != full) throw InputError("family does not cover the ground set");
}

std::string Cover::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) s += ',';
    s += sets_[i].to_string();
  }
  return s + "}";
}

Entourage neighbornet_from_cover(const Cover& c) {
  const Subset full = Subset::full(c.n());
  std::vector<Subset> rows(c.n(), full);
  for (Subset s : c.sets()) {
    for (unsigned x : s.elements()) rows[x] &= s;
  }
  return Entourage(c.n(), std::move(rows));
}

bool is_interior_preserving(const FiniteTopology& t, const Cover& c) {
  if (t.n() != c.n()) throw InputError("cover and topology live on different ground sets");
  for (Subset s : c.sets()) {
    if (!t.is_open(s)) throw InputError("cover member " + s.to_string() + " is not open");
  }
  const Entourage u = neighbornet_from_cover(c);
  for (unsigned x = 0; x < c.n(); ++x) {
    if (!t.is_open(u(x))) return false;
  }
  return true;
}

}  // namespace tqu::finite
