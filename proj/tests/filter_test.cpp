#include <numeric>

#include "doctest.h"
#include "test_support.hpp"
#include "tqu/errors.hpp"
#include "tqu/filters/filter.hpp"
#include "tqu/filters/pfilter.hpp"
#include "tqu/omega/piles.hpp"

using namespace tqu::filters;
using tqu::omega::UPSet;
using tqu::testing::Rng;

namespace {

const UPSet evens = UPSet::from_strings("", "10");
const UPSet odds = UPSet::from_strings("", "01");
const UPSet mult4 = UPSet::progression(0, 4);

// Joint window past both prefixes covering a full common period.
std::uint64_t window_end(const UPSet& a, const UPSet& b) {
  return std::max(a.prefix_length(), b.prefix_length()) + 2 * std::lcm(a.period_length(), b.period_length());
}

bool subset_oracle(const UPSet& a, const UPSet& b) {
  for (std::uint64_t i = 0; i < window_end(a, b); ++i) {
    if (a.contains(i) && !b.contains(i)) return false;
  }
  return true;
}

// a - b finite iff no point of a - b in one common period past both prefixes.
bool almost_subset_oracle(const UPSet& a, const UPSet& b) {
  const std::uint64_t start = std::max(a.prefix_length(), b.prefix_length());
  for (std::uint64_t i = start; i < window_end(a, b); ++i) {
    if (a.contains(i) && !b.contains(i)) return false;
  }
  return true;
}

bool contains_oracle(const FilterPresentation& f, const UPSet& m) {
  for (const UPSet& g : f.generators()) {
    if (f.cofinite_closed() ? almost_subset_oracle(g, m) : subset_oracle(g, m)) return true;
  }
  return false;
}

UPSet random_set(Rng& rng, bool dense = false) {
  UPSet::Bits prefix(rng.below(6)), period(1 + rng.below(4));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = dense ? rng.below(4) != 0 : rng.coin();
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = dense ? rng.below(4) != 0 : rng.coin();
  return UPSet::from_bits(prefix, period);
}

// Pile-by-pile count over a long window, independent of the library routine.
std::uint64_t max_hits(const UPSet& z, const UPSet& n, std::uint64_t window) {
  std::uint64_t best = 0, current = 0;
  for (std::uint64_t i = 0; i < window; ++i) {
    if (!n.contains(i)) {
      current = 0;
      continue;
    }
    current += z.contains(i);
    best = std::max(best, current);
  }
  return best;
}

void replay(const FilterPresentation& f, const CounterExample& c) {
  CHECK(filter_contains(f, c.n));
  CHECK_FALSE(contains_oracle(f, c.n - c.z));
  CHECK(max_hits(c.z, c.n, 800) == max_hits(c.z, c.n, 1600));
}

}  // namespace

TEST_SUITE_BEGIN("pfilters");

TEST_CASE("filter_from_generators") {
  CHECK(filter_from_generators({UPSet::naturals()}).generators() == std::vector<UPSet>{UPSet::naturals()});
  CHECK(FilterPresentation().generators() == std::vector<UPSet>{UPSet::naturals()});
  CHECK(filter_from_generators({}) == FilterPresentation());
  CHECK(principal_filter(evens).generators() == std::vector<UPSet>{evens});

  const UPSet not0 = UPSet::naturals() - UPSet::finite({0});
  const UPSet not1 = UPSet::naturals() - UPSet::finite({1});
  const auto f = filter_from_generators({not0, not1});
  CHECK(f.generators().size() == 3);
  const UPSet both = UPSet::naturals() - UPSet::finite({0, 1});
  CHECK(std::find(f.generators().begin(), f.generators().end(), both) != f.generators().end());

  CHECK_THROWS_AS(filter_from_generators({evens, odds}), tqu::ImproperFilterError);
  CHECK_THROWS_AS(filter_from_generators({UPSet()}), tqu::ImproperFilterError);
  CHECK_THROWS_AS(filter_from_generators({UPSet::finite({1, 2})}, true), tqu::ImproperFilterError);
  CHECK_NOTHROW(filter_from_generators({UPSet::finite({1, 2})}));
}

TEST_CASE("intersection closure against a subset-intersection oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<UPSet> gs;
    const auto count = 1 + rng.below(4);
    for (std::uint64_t i = 0; i < count; ++i) gs.push_back(random_set(rng, true));
    // Oracle: intersections of every nonempty subfamily.
    std::vector<UPSet> expected;
    bool improper = false;
    for (std::uint64_t mask = 1; mask < (1u << gs.size()); ++mask) {
      UPSet acc = UPSet::naturals();
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (mask >> i & 1u) acc = acc & gs[i];
      }
      improper |= acc.is_empty();
      if (std::find(expected.begin(), expected.end(), acc) == expected.end()) expected.push_back(acc);
    }
    if (improper) {
      CHECK_THROWS_AS(filter_from_generators(gs), tqu::ImproperFilterError);
      continue;
    }
    std::sort(expected.begin(), expected.end());
    CHECK(filter_from_generators(gs).generators() == expected);
  }
}

TEST_CASE("filter_contains") {
  const auto pe = principal_filter(evens);
  CHECK(filter_contains(pe, evens | UPSet::finite({1})));
  CHECK_FALSE(filter_contains(pe, odds));
  CHECK_FALSE(filter_contains(pe, evens - UPSet::finite({0})));

  const auto fr = frechet_filter(4);
  CHECK(filter_contains(fr, UPSet::naturals() - UPSet::finite({2})));
  CHECK(filter_contains(fr, UPSet::from(100)));
  CHECK_FALSE(filter_contains(fr, evens));

  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<UPSet> gs{random_set(rng, true)};
    if (rng.coin()) gs.push_back(random_set(rng, true));
    FilterPresentation f;
    try {
      f = filter_from_generators(gs, rng.coin());
    } catch (const tqu::ImproperFilterError&) {
      continue;
    }
    const UPSet m = random_set(rng, true);
    CHECK(filter_contains(f, m) == contains_oracle(f, m));
    // Monotone in the set argument.
    if (filter_contains(f, m)) CHECK(filter_contains(f, m | random_set(rng)));
  }
}

TEST_CASE("filter_leq") {
  const auto pe = principal_filter(evens), p4 = principal_filter(mult4);
  CHECK(filter_leq(pe, pe));
  CHECK(filter_leq(FilterPresentation(), pe));
  CHECK(filter_leq(pe, p4));
  CHECK_FALSE(filter_leq(p4, pe));
  CHECK(filter_leq(FilterPresentation(), frechet_filter()));
  CHECK_FALSE(filter_leq(frechet_filter(), FilterPresentation()));

  // Mutual leq coincides with equal membership on every small test set.
  Rng rng(77);
  std::vector<UPSet> tests;
  for (int i = 0; i < 300; ++i) tests.push_back(random_set(rng));
  for (int trial = 0; trial < 300; ++trial) {
    FilterPresentation f1, f2;
    try {
      f1 = filter_from_generators({random_set(rng, true)}, rng.coin());
      f2 = filter_from_generators({random_set(rng, true)}, rng.coin());
    } catch (const tqu::ImproperFilterError&) {
      continue;
    }
    auto tests_with = tests;
    for (const auto* f : {&f1, &f2}) {
      for (const UPSet& g : f->generators()) tests_with.push_back(g);
    }
    bool same = true, included = true;
    for (const UPSet& m : tests_with) {
      same &= filter_contains(f1, m) == filter_contains(f2, m);
      included &= !filter_contains(f1, m) || filter_contains(f2, m);
    }
    if (filter_leq(f1, f2)) CHECK(included);
    if (filter_leq(f1, f2) && filter_leq(f2, f1)) CHECK(same);
    if (!f1.cofinite_closed() && !f2.cofinite_closed()) {
      CHECK((filter_leq(f1, f2) && filter_leq(f2, f1)) == same);
    }
  }
}

TEST_CASE("filter json") {
  const auto f = filter_from_json(nlohmann::json::parse(R"j(["up(prefix=,period=10)"])j"));
  CHECK(f == principal_filter(evens));
  const auto fr = filter_from_json(nlohmann::json::parse(
      R"j({"generators":["up(prefix=0,period=1)","up(prefix=00,period=1)"],"cofinite":true})j"));
  CHECK(fr == frechet_filter(2));
  CHECK(filter_from_json(to_json(fr)) == fr);
  CHECK_THROWS_AS(filter_from_json(nlohmann::json::parse(R"j(["fin{}"])j")), tqu::ImproperFilterError);
  CHECK_THROWS_AS(filter_from_json(nlohmann::json::parse(R"({"gens":[]})")), tqu::InputError);
  CHECK_THROWS_AS(filter_from_json(nlohmann::json::parse(R"j([3])j")), tqu::InputError);
}

TEST_CASE("pfilter_check examples") {
  const auto r = pfilter_check(principal_filter(evens), {1, 1});
  CHECK(r == PFilterResult{CounterExample{evens, UPSet::finite({0})}});
  CHECK(pfilter_check(principal_filter(evens), {8, 4}) == r);

  CHECK(pfilter_check(FilterPresentation(), {3, 2}) ==
        PFilterResult{CounterExample{UPSet::naturals(), UPSet::finite({0})}});

  CHECK(std::holds_alternative<Pass>(pfilter_check(frechet_filter(5), {8, 4})));
  CHECK(std::holds_alternative<Pass>(pfilter_check(frechet_filter(5), {16, 8})));
  CHECK(std::holds_alternative<Pass>(pfilter_check(frechet_filter(5), {6, 3}, true)));

  // Without the finite-modification closure the same generators form a
  // principal filter, which one removed point refutes.
  std::vector<UPSet> gs;
  for (std::uint64_t i = 1; i <= 5; ++i) gs.push_back(UPSet::from(i));
  const auto bounded = filter_from_generators(gs);
  const auto c = std::get<CounterExample>(pfilter_check(bounded, {8, 4}));
  replay(bounded, c);

  CHECK_THROWS_AS(pfilter_check(FilterPresentation(), {0, 1}), tqu::InputError);
  CHECK(to_string(r) == "counterexample: n=up(prefix=,period=10) z=fin{0}");
}

TEST_CASE("pfilter_check refutations replay") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    FilterPresentation f;
    try {
      std::vector<UPSet> gs{random_set(rng, true)};
      if (rng.coin()) gs.push_back(random_set(rng, true));
      f = filter_from_generators(gs, rng.coin());
    } catch (const tqu::ImproperFilterError&) {
      continue;
    }
    const auto r = pfilter_check(f, {4, 3}, rng.coin());
    if (const auto* c = std::get_if<CounterExample>(&r)) replay(f, *c);
  }
}

TEST_SUITE_END();
