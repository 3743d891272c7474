#include <numeric>

#include "doctest.h"
#include "test_support.hpp"
#include "tqu/errors.hpp"
#include "tqu/omega/piles.hpp"
#include "tqu/omega/upset.hpp"

using namespace tqu::omega;
using tqu::testing::Rng;

namespace {

// Raw (possibly non-canonical) description, evaluated directly.
struct RawSet {
  UPSet::Bits prefix, period;
  bool at(std::uint64_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }
};

RawSet random_raw(Rng& rng, std::size_t max_prefix = 8, std::size_t max_period = 6) {
  RawSet r;
  r.prefix.resize(rng.below(max_prefix + 1));
  r.period.resize(1 + rng.below(max_period));
  for (std::size_t i = 0; i < r.prefix.size(); ++i) r.prefix[i] = rng.coin();
  for (std::size_t i = 0; i < r.period.size(); ++i) r.period[i] = rng.coin();
  return r;
}

UPSet make(const RawSet& r) { return UPSet::from_bits(r.prefix, r.period); }

const UPSet evens = UPSet::from_strings("", "10");
const UPSet odds = UPSet::from_strings("", "01");

// Piles of the raw set inside [0, window) that end strictly before window-1.
std::vector<Run> scan_piles(const UPSet& s, std::uint64_t window) {
  std::vector<Run> out;
  std::uint64_t i = 0;
  while (i < window) {
    if (!s.contains(i)) {
      ++i;
      continue;
    }
    const auto first = i;
    while (i < window && s.contains(i)) ++i;
    out.push_back({first, i - 1});
  }
  return out;
}

// Brute-force max over piles clipped to [0, window) of |H ∩ z|.
std::uint64_t max_pile_hits(const UPSet& z, const UPSet& n, std::uint64_t window) {
  std::uint64_t best = 0;
  for (const Run& r : scan_piles(n, window)) {
    std::uint64_t c = 0;
    for (auto i = r.first; i <= r.last; ++i) c += z.contains(i);
    best = std::max(best, c);
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("omega-sets");

TEST_CASE("upset construction") {
  CHECK(UPSet::from_strings("", "1") == UPSet::naturals());
  CHECK(UPSet::from_strings("", "1").to_string() == "up(prefix=,period=1)");
  CHECK(evens.contains(0));
  CHECK_FALSE(evens.contains(7));
  CHECK(evens.to_string() == "up(prefix=,period=10)");

  const UPSet s = UPSet::from_strings("0110", "0");
  CHECK(s == UPSet::finite({1, 2}));
  CHECK(s.to_string() == "fin{1,2}");
  for (std::uint64_t i = 0; i < 64; ++i) CHECK(s.contains(i) == (i == 1 || i == 2));

  CHECK(UPSet::from_strings("1010", "1010") == evens);
  CHECK(UPSet::from_strings("1", "01") == evens);
  CHECK(UPSet().is_empty());
  CHECK(UPSet().period() == UPSet::Bits{false});
  CHECK_THROWS_AS(UPSet::from_strings("01", ""), tqu::InputError);
  CHECK_THROWS_AS(UPSet::from_strings("2", "1"), tqu::InputError);
}

TEST_CASE("canonical form agrees with the 512-bit membership oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const RawSet a = random_raw(rng), b = random_raw(rng);
    const UPSet ca = make(a), cb = make(b);
    for (std::uint64_t i = 0; i < 512; ++i) REQUIRE(ca.contains(i) == a.at(i));
    // Canonical period is primitive and prefix cannot be shortened.
    const auto& per = ca.period();
    for (std::size_t d = 1; d < per.size(); ++d) {
      if (per.size() % d) continue;
      bool repeats = true;
      for (std::size_t i = d; i < per.size(); ++i) repeats &= per[i] == per[i - d];
      CHECK_FALSE(repeats);
    }
    if (!ca.prefix().empty()) CHECK(ca.prefix().back() != ca.period().back());

    const std::uint64_t window = a.prefix.size() + b.prefix.size() +
                                 2 * std::lcm(a.period.size(), b.period.size());
    bool equal_on_window = true;
    for (std::uint64_t i = 0; i < window; ++i) equal_on_window &= a.at(i) == b.at(i);
    CHECK((ca == cb) == equal_on_window);
  }
}

TEST_CASE("bool_ops") {
  CHECK((evens | odds) == UPSet::naturals());
  CHECK((evens & odds) == UPSet());
  CHECK((evens & odds).to_string() == "fin{}");
  CHECK((UPSet::naturals() - evens) == odds);
  CHECK(bool_op(evens, evens, BoolOp::complement) == odds);

  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const RawSet a = random_raw(rng), b = random_raw(rng);
    const UPSet ca = make(a), cb = make(b);
    const UPSet u = ca | cb, n = ca & cb, d = ca - cb, c = ca.complement();
    const std::uint64_t window =
        std::max(a.prefix.size(), b.prefix.size()) + 2 * std::lcm(a.period.size(), b.period.size());
    for (std::uint64_t i = 0; i < window; ++i) {
      REQUIRE(u.contains(i) == (a.at(i) || b.at(i)));
      REQUIRE(n.contains(i) == (a.at(i) && b.at(i)));
      REQUIRE(d.contains(i) == (a.at(i) && !b.at(i)));
      REQUIRE(c.contains(i) == !a.at(i));
    }
    CHECK(ca.subset_of(u));
    CHECK(n.subset_of(ca));
    CHECK(ca.almost_subset_of(ca | UPSet::finite({3, 9})));
  }
}

TEST_CASE("elements and counting") {
  const UPSet s = UPSet::finite({1, 2, 3, 5, 6, 9});
  CHECK(s.elements() == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 9});
  CHECK(s.max_element() == 9);
  CHECK(s.min_element() == 1);
  CHECK(evens.count_in(0, 10) == 5);
  CHECK(evens.count_in(3, 1003) == 500);
  CHECK(UPSet::from(4).min_element() == 4);
  CHECK_FALSE(UPSet().min_element());
  CHECK_THROWS_AS(evens.elements(), tqu::InputError);
  CHECK(UPSet::progression(2, 3).to_string() == "up(prefix=,period=001)");
  CHECK(UPSet::below(3) == UPSet::finite({0, 1, 2}));
}

TEST_CASE("parse and print") {
  CHECK(UPSet::parse("fin{1,2,3}") == UPSet::finite({1, 2, 3}));
  CHECK(UPSet::parse("fin{}") == UPSet());
  CHECK(UPSet::parse("up(prefix=,period=10)") == evens);
  CHECK(UPSet::parse("up(prefix=0110,period=0)").to_string() == "fin{1,2}");
  CHECK(UPSet::parse("fin{3,1}") == UPSet::finite({1, 3}));
  for (const char* bad : {"fin{", "fin{1,}", "fin{a}", "up(prefix=,period=)", "up(prefix=2,period=1)", "evens",
                          "up(prefix=,period=1", "fin{-1}"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(UPSet::parse(bad), tqu::InputError);
  }
  CHECK(UPSet::from_json(evens.to_json()) == evens);
  CHECK(evens.to_json().dump() == R"({"period":"10","prefix":""})");

  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const UPSet s = make(random_raw(rng));
    CHECK(UPSet::parse(s.to_string()) == s);
  }
}

TEST_CASE("piles") {
  const auto d = piles(UPSet::finite({1, 2, 3, 5, 6, 9}));
  CHECK(d.finite_runs == std::vector<Run>{{1, 3}, {5, 6}, {9, 9}});
  CHECK(std::holds_alternative<std::monostate>(d.tail));
  CHECK(d.to_string() == "[1,3] [5,6] [9,9]");

  const auto nat = piles(UPSet::naturals());
  CHECK(nat.finite_runs.empty());
  CHECK(std::get<InfiniteRun>(nat.tail).start == 0);
  CHECK(nat.to_string() == "infinite run from 0");

  const auto ev = piles(evens);
  CHECK(ev.finite_runs.empty());
  const auto& per = std::get<PeriodicRuns>(ev.tail);
  CHECK(per.period == 2);
  CHECK(per.runs == std::vector<Run>{{0, 0}});
  CHECK(ev.to_string() == "periodic runs from 0 every 2: [+0,+0]");

  CHECK(piles(UPSet()).to_string() == "no piles");
  CHECK(piles(UPSet::from_strings("0111", "1")).to_string() == "infinite run from 1");
  CHECK(piles(UPSet::from_strings("11", "0111")).to_string() == "[0,1] periodic runs from 3 every 4: [+0,+2]");
}

TEST_CASE("piles match a linear scan") {
  Rng rng(17);
  constexpr std::uint64_t window = 400;
  for (int trial = 0; trial < 1000; ++trial) {
    const UPSet s = make(random_raw(rng));
    const auto d = piles(s);
    auto trimmed = [&](std::vector<Run> runs) {
      std::erase_if(runs, [&](const Run& r) { return r.last >= window - 1; });
      return runs;
    };
    CHECK(trimmed(d.piles_below(window)) == trimmed(scan_piles(s, window)));
    // Runs are disjoint, ordered and non-adjacent, and cover the set.
    const auto runs = d.piles_below(window);
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i) CHECK(runs[i].first > runs[i - 1].last + 1);
      for (auto x = runs[i].first; x <= runs[i].last && x < window; ++x) {
        CHECK(s.contains(x));
        ++covered;
      }
    }
    CHECK(covered == s.count_in(0, window));
  }
}

TEST_CASE("admissibility") {
  const UPSet mult4 = UPSet::progression(0, 4);
  CHECK(admissibility(mult4, evens) == AdmissibilityResult{Admissible{1}});
  CHECK(admissibility(evens, UPSet::naturals()) == AdmissibilityResult{NotAdmissible{{0}}});
  CHECK(admissibility(UPSet(), evens) == AdmissibilityResult{Admissible{0}});
  CHECK(admissibility(UPSet(), UPSet::naturals()) == AdmissibilityResult{Admissible{0}});
  CHECK(admissibility(UPSet::finite({0, 4, 7}), UPSet::from_strings("", "1110")) ==
        AdmissibilityResult{Admissible{1}});
  CHECK(admissibility(UPSet::finite({0, 1, 7}), UPSet::from_strings("", "1110")) ==
        AdmissibilityResult{Admissible{2}});
  CHECK(to_string(admissibility(evens, UPSet::naturals())) == "not admissible: infinite run from 0");
  CHECK(to_string(admissibility(mult4, evens)) == "admissible k=1");
}

TEST_CASE("admissibility against the brute-force window oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const UPSet z = make(random_raw(rng));
    const UPSet n = make(random_raw(rng));
    const auto r = admissibility(z, n);
    const auto small = max_pile_hits(z, n, 600), large = max_pile_hits(z, n, 1200);
    if (const auto* a = std::get_if<Admissible>(&r)) {
      CHECK(a->bound == small);
      CHECK(a->bound == large);
    } else {
      CHECK(large > small);
      CHECK(n.is_cofinite());
    }
  }
}

TEST_CASE("admissibility laws") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const UPSet z = make(random_raw(rng));
    const UPSet n = make(random_raw(rng));
    const UPSet smaller = z & make(random_raw(rng));
    const auto rz = admissibility(z, n);
    CHECK(admissibility(z & n, n) == rz);
    if (const auto* a = std::get_if<Admissible>(&rz)) {
      const auto rs = admissibility(smaller, n);
      REQUIRE(std::holds_alternative<Admissible>(rs));
      CHECK(std::get<Admissible>(rs).bound <= a->bound);
    }
    const UPSet fin = z & UPSet::below(12);
    const auto rf = admissibility(fin, n);
    REQUIRE(std::holds_alternative<Admissible>(rf));
    CHECK(std::get<Admissible>(rf).bound <= fin.elements().size());
  }
}

TEST_SUITE_END();
