#include "tqu/finite/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "tqu/errors.hpp"

namespace tqu::finite {

namespace {

void check_bound(unsigned n, EnumerationLimits limits) {
  const unsigned bound = std::min(limits.max_points, kEnumerationCeiling);
  if (n > bound) {
    throw ResourceError("enumeration on " + std::to_string(n) + " points exceeds the bound of " +
                        std::to_string(bound));
  }
}

// A family of subsets of an n <= 6 point set, as a bit mask over the 2^n subsets.
using Family = std::uint64_t;

Family family_of(const FiniteTopology& t) {
  Family f = 0;
  for (Subset s : t.opens()) f |= Family{1} << s.bits();
  return f;
}

std::vector<Subset> members_of(Family f) {
  std::vector<Subset> out;
  for (Family b = f; b != 0; b &= b - 1) out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(b)));
  return out;
}

bool is_transitive(const std::vector<Subset>& rows) {
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (unsigned y : rows[x].elements()) {
      if (!rows[y].subset_of(rows[x])) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_topology(unsigned n, const std::function<void(const FiniteTopology&)>& visit,
                       EnumerationLimits limits) {
  check_bound(n, limits);
  // Off-diagonal pairs (x, y), x != y, each an optional edge x -> y.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  std::unordered_set<Family> seen;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Subset> rows(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (unsigned x = 0; x < n; ++x) rows[x] = Subset::singleton(x);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) rows[pairs[k].first] |= Subset::singleton(pairs[k].second);
    }
    if (!is_transitive(rows)) continue;
    FiniteTopology t = alexandrov_topology(n, rows);
    if (seen.insert(family_of(t)).second) visit(t);
  }
}

std::vector<FiniteTopology> enumerate_topologies(unsigned n, EnumerationLimits limits) {
  std::vector<FiniteTopology> out;
  for_each_topology(n, [&](const FiniteTopology& t) { out.push_back(t); }, limits);
  return out;
}

std::vector<FiniteTopology> enumerate_topologies_by_closure(unsigned n, EnumerationLimits limits) {
  check_bound(n, limits);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  const Family indiscrete = (Family{1} << 0) | (Family{1} << (subsets - 1));

  // Adjoining s to a topology t yields {o2 | (s & o1) : o1, o2 in t}, which is
  // already closed under union and intersection.
  auto adjoin = [](Family t, std::uint32_t s) {
    const std::vector<Subset> opens = members_of(t);
    Family out = 0;
    for (Subset o1 : opens) {
      const std::uint32_t cut = s & o1.bits();
      for (Subset o2 : opens) out |= Family{1} << (o2.bits() | cut);
    }
    return out;
  };

  std::unordered_set<Family> seen{indiscrete};
  std::vector<Family> frontier{indiscrete};
  while (!frontier.empty()) {
    std::vector<Family> next;
    for (Family t : frontier) {
      for (std::uint32_t s = 0; s < subsets; ++s) {
        if ((t >> s) & 1u) continue;
        const Family grown = adjoin(t, s);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }

  std::vector<FiniteTopology> out;
  out.reserve(seen.size());
  for (Family f : seen) out.emplace_back(n, members_of(f));
  std::sort(out.begin(), out.end(),
            [](const FiniteTopology& a, const FiniteTopology& b) { return a.opens() < b.opens(); });
  return out;
}

std::vector<LBase> enumerate_lbases(const FiniteTopology& t) {
  std::vector<Subset> optional;
  for (Subset o : t.opens()) {
    if (!o.empty() && o != t.ground()) optional.push_back(o);
  }
  if (optional.size() > 18) throw ResourceError("too many open sets for l-base enumeration");

  std::vector<LBase> out;
  const std::uint32_t count = std::uint32_t{1} << optional.size();
  std::vector<Subset> members;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    members.assign({Subset{}, t.ground()});
    for (std::size_t k = 0; k < optional.size(); ++k) {
      if ((mask >> k) & 1u) members.push_back(optional[k]);
    }
    std::sort(members.begin(), members.end());
    auto has = [&](Subset s) { return std::binary_search(members.begin(), members.end(), s); };
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
        ok = has(members[i] | members[j]) && has(members[i] & members[j]);
      }
    }
    for (std::size_t i = 0; i < t.opens().size() && ok; ++i) {
      Subset u;
      for (Subset m : members) {
        if (m.subset_of(t.opens()[i])) u |= m;
      }
      ok = u == t.opens()[i];
    }
    if (ok) out.emplace_back(t, members);
  }
  return out;
}

}  // namespace tqu::finite
