#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "random_inputs.hpp"
#include "tqu/chain/separation.hpp"
#include "tqu/errors.hpp"
#include "tqu/finite/enumerate.hpp"
#include "tqu/finite/json.hpp"
#include "tqu/omega/piles.hpp"

namespace tqu::cli {

namespace {

using chain::Model;
using nlohmann::json;
using omega::UPSet;

std::vector<Model> models_of(const SuiteOptions& o) {
  if (o.model) return {*o.model};
  return {Model::increasing, Model::decreasing};
}

std::string case_id(std::uint64_t trial, Model m) { return "trial-" + std::to_string(trial) + "/" + chain::to_string(m); }

json rows_json(const finite::Entourage& u) {
  json rows = json::array();
  for (finite::Subset r : u.rows()) rows.push_back(finite::to_json(r));
  return rows;
}

// Largest |H ∩ z| over the piles H of n met inside [0, width).
std::uint64_t scan_max_hits(const UPSet& z, const UPSet& n, std::uint64_t width) {
  std::uint64_t best = 0, current = 0;
  for (std::uint64_t i = 0; i < width; ++i) {
    current = n.contains(i) ? current + z.contains(i) : 0;
    best = std::max(best, current);
  }
  return best;
}

// Counterexample replay by direct scanning: z's hits per pile stop growing,
// n is in the filter, and n - z is not.
bool replays(const filters::FilterPresentation& f, const filters::CounterExample& c) {
  const bool admissible = scan_max_hits(c.z, c.n, 1024) == scan_max_hits(c.z, c.n, 2048);
  return admissible && filters::filter_contains(f, c.n) && !filters::filter_contains(f, c.n - c.z);
}

void pervin_oracle(const SuiteOptions& o, SuiteReport& r) {
  if (o.n_max > finite::kEnumerationCeiling) {
    throw ResourceError("n_max may not exceed " + std::to_string(finite::kEnumerationCeiling));
  }
  const finite::EnumerationLimits limits{std::max(o.n_max, 1u)};
  for (unsigned n = 1; n <= o.n_max; ++n) {
    auto by_preorder = finite::enumerate_topologies(n, limits);
    const auto by_closure = finite::enumerate_topologies_by_closure(n, limits);
    std::sort(by_preorder.begin(), by_preorder.end(),
              [](const auto& a, const auto& b) { return a.opens() < b.opens(); });
    if (by_preorder != by_closure) {
      r.failures.push_back({"census-n" + std::to_string(n), {{"n", n}}, by_closure.size(), by_preorder.size()});
    }
    for (const auto& t : by_preorder) {
      ++r.cases;
      const auto q = finite::pervin(t);
      // Minimum of the Pervin base: x relates to the intersection of its open neighborhoods.
      std::vector<finite::Subset> rows;
      for (unsigned x = 0; x < n; ++x) {
        finite::Subset row = t.ground();
        for (finite::Subset o2 : t.opens()) {
          if (o2.contains(x)) row &= o2;
        }
        rows.push_back(row);
      }
      const finite::Entourage expected(n, rows);
      const auto induced = finite::induced_topology(q);
      if (induced != t || q.minimum() != expected || !finite::is_totally_bounded(q, t)) {
        r.failures.push_back({"topology-" + std::to_string(r.cases), finite::to_json(t), finite::to_json(t),
                              finite::to_json(induced)});
      }
    }
  }
}

void cover_idempotence(const SuiteOptions& o, SuiteReport& r) {
  Random rng(o.seed);
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(8));
    const finite::Cover c = random_cover(rng, n);
    const finite::Entourage u = finite::neighbornet_from_cover(c);
    ++r.cases;
    bool direct = true;
    for (unsigned x = 0; x < n; ++x) {
      finite::Subset v = finite::Subset::full(n);
      for (finite::Subset s : c.sets()) {
        if (s.contains(x)) v &= s;
      }
      direct &= u(x) == v;
    }
    const finite::Entourage again = finite::neighbornet_from_cover(u.value_cover());
    if (!direct || !u.is_transitive() || again != u) {
      r.failures.push_back({"cover-" + std::to_string(trial), json{{"n", n}, {"cover", c.to_string()}}, rows_json(u),
                            rows_json(again)});
    }

    // U ⊆ U_N for N = U(A) with U transitive.
    const finite::Entourage p = random_preorder(rng, n);
    const finite::Subset a = random_subset(rng, n);
    const finite::Subset image = p.image(a);
    ++r.cases;
    if (!p.subset_of(finite::u_n(image, n))) {
      r.failures.push_back({"image-" + std::to_string(trial), json{{"u", rows_json(p)}, {"a", finite::to_json(a)}},
                            "U subset of U_N", rows_json(finite::u_n(image, n))});
    }
  }
}

void intersection_law(const SuiteOptions& o, SuiteReport& r) {
  Random rng(o.seed);
  constexpr std::uint64_t width = 64;
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    const UPSet a1 = random_upset(rng), a2 = random_upset(rng);
    for (Model m : models_of(o)) {
      ++r.cases;
      const auto u1 = chain::symnet_from_cover(chain::cover_alpha(a1, m));
      const auto u2 = chain::symnet_from_cover(chain::cover_alpha(a2, m));
      const auto meet = chain::symnet_intersect(u1, u2);
      const auto law = chain::symnet_from_cover(chain::cover_alpha(a1 & a2, m));
      // Direct evaluation from the cover of A1 ∩ A2 and from both covers.
      bool pointwise = true;
      for (std::uint64_t x = 0; x < width && pointwise; ++x) {
        std::vector<bool> expected(width, true);
        for (std::uint64_t i = 1; i < width + 32; ++i) {
          const bool holds = m == Model::increasing ? x < i : x >= i;
          if (!holds || (a1.contains(i) && a2.contains(i))) continue;
          for (std::uint64_t j = 0; j < width; ++j) {
            if (m == Model::increasing ? j >= i : j < i) expected[j] = false;
          }
        }
        const UPSet got = meet.value(x);
        for (std::uint64_t j = 0; j < width; ++j) pointwise &= got.contains(j) == expected[j];
      }
      if (!pointwise || !chain::symnet_equal(meet, law)) {
        r.failures.push_back({case_id(trial, m), json{{"a1", a1.to_string()}, {"a2", a2.to_string()}},
                              chain::to_json(law), chain::to_json(meet)});
      }
    }
  }
}

void pile_bound(const SuiteOptions& o, SuiteReport& r) {
  Random rng(o.seed);
  constexpr std::uint64_t window = 256;
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    for (Model m : models_of(o)) {
      const PileTriple t = random_pile_triple(rng, m);
      ++r.cases;
      json inputs = {{"a1", t.a1.to_string()}, {"a2", t.a2.to_string()}, {"beta", json::array()}};
      for (const UPSet& b : t.beta) inputs["beta"].push_back(b.to_string());
      const auto res = chain::pile_bound_check(t.beta, t.a1, t.a2, m, window);
      if (const auto* v = std::get_if<chain::PileBoundViolation>(&res)) {
        r.failures.push_back({case_id(trial, m), inputs, "|H - A1| <= " + std::to_string(v->k),
                              json{{"pile", {v->pile.first, v->pile.last}}, {"count", v->count}}});
        continue;
      }
      if (std::get<chain::PileBoundOk>(res).vacuous) {
        r.failures.push_back({case_id(trial, m), inputs, "containment precondition holds", "vacuous"});
        continue;
      }
      // Independent count: distinct U_β values and the worst pile by scanning.
      std::vector<UPSet> values;
      for (std::uint64_t x = 0; x < 32; ++x) {
        UPSet v = UPSet::naturals();
        for (const UPSet& b : t.beta) {
          if (b.contains(x)) v = v & b;
        }
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
      }
      const UPSet n = t.a2 - UPSet::finite({0});
      const std::uint64_t worst = scan_max_hits(n - t.a1, n, window);
      if (worst > values.size()) {
        r.failures.push_back({case_id(trial, m), inputs, "|H - A1| <= " + std::to_string(values.size()), worst});
      }
    }
  }
}

void t1_suite(const SuiteOptions& o, SuiteReport& r) {
  for (Model m : models_of(o)) {
    ++r.cases;
    const auto q = chain::t1_construct(m);
    const auto cls = chain::pi_delta_membership(q);
    const auto vd = chain::in_vdelta(q.extra.at(0), m);
    const bool non_member = std::holds_alternative<chain::NonMember>(vd) &&
                            chain::replay(q.extra[0], std::get<chain::NonMember>(vd).certificate);
    if (!std::holds_alternative<chain::InClass>(cls) || !non_member || !chain::is_transitive(q.extra[0])) {
      r.failures.push_back({chain::to_string(m), json{{"model", chain::to_string(m)}},
                            "in class, transitive, not in V_delta", chain::to_string(vd)});
    }
  }
}

void vsigma_separation(const SuiteOptions& o, SuiteReport& r) {
  const UPSet evens = UPSet::from_strings("", "10");
  const auto pe = filters::principal_filter(evens);
  const auto fr = filters::frechet_filter(5);
  for (Model m : models_of(o)) {
    r.cases += 3;
    const auto forward = chain::separates(pe, fr, m);
    if (forward != chain::SeparationResult{chain::Distinct{evens}}) {
      r.failures.push_back({"principal-vs-frechet/" + chain::to_string(m), filters::to_json(pe),
                            "distinct: " + evens.to_string(), chain::to_string(forward)});
    }
    const auto backward = chain::separates(fr, pe, m);
    if (!std::holds_alternative<chain::Inconclusive>(backward)) {
      r.failures.push_back({"frechet-vs-principal/" + chain::to_string(m), filters::to_json(fr), "inconclusive",
                            chain::to_string(backward)});
    }
    const bool in_class = std::holds_alternative<chain::InClass>(chain::pi_delta_membership(chain::v_sigma(pe, m))) &&
                          std::holds_alternative<chain::InClass>(chain::pi_delta_membership(chain::v_sigma(fr, m)));
    if (!in_class) r.failures.push_back({"v_sigma/" + chain::to_string(m), json::object(), "in class", "not in class"});
  }
  Random rng(o.seed);
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    const auto coarse = random_filter(rng);
    auto gs = coarse.generators();
    gs.push_back(random_upset(rng, 6, 4));
    filters::FilterPresentation fine;
    try {
      fine = filters::filter_from_generators(gs);
    } catch (const ImproperFilterError&) {
      fine = coarse;
    }
    for (Model m : models_of(o)) {
      ++r.cases;
      const auto res = chain::separates(coarse, fine, m);
      if (!filters::filter_leq(coarse, fine) || !std::holds_alternative<chain::Inconclusive>(res)) {
        r.failures.push_back({case_id(trial, m), json{{"f1", filters::to_json(coarse)}, {"f2", filters::to_json(fine)}},
                              "inconclusive", chain::to_string(res)});
      }
    }
  }
}

void pfilter_suite(const SuiteOptions& o, SuiteReport& r) {
  const UPSet evens = UPSet::from_strings("", "10");
  const std::pair<std::string, filters::FilterPresentation> refuted[] = {
      {"principal-evens", filters::principal_filter(evens)}, {"trivial", filters::FilterPresentation()}};
  for (const auto& [name, f] : refuted) {
    ++r.cases;
    const auto res = filters::pfilter_check(f, o.budget);
    const auto* c = std::get_if<filters::CounterExample>(&res);
    if (!c || !replays(f, *c)) r.failures.push_back({name, filters::to_json(f), "replayable counterexample", to_string(res)});
  }
  ++r.cases;
  const auto fr = filters::frechet_filter(5);
  const auto fres = filters::pfilter_check(fr, o.budget);
  if (!std::holds_alternative<filters::Pass>(fres)) {
    r.failures.push_back({"frechet", filters::to_json(fr), "pass", to_string(fres)});
  }
  Random rng(o.seed);
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    const auto f = random_filter(rng);
    ++r.cases;
    const auto res = filters::pfilter_check(f, {4, 3});
    if (const auto* c = std::get_if<filters::CounterExample>(&res); c && !replays(f, *c)) {
      r.failures.push_back({"trial-" + std::to_string(trial), filters::to_json(f), "replayable counterexample",
                            to_string(res)});
    }
  }
}

const std::map<std::string, std::function<void(const SuiteOptions&, SuiteReport&)>>& registry() {
  static const std::map<std::string, std::function<void(const SuiteOptions&, SuiteReport&)>> suites = {
      {"pervin-oracle", pervin_oracle}, {"cover-idempotence", cover_idempotence},
      {"intersection-law", intersection_law}, {"pile-bound", pile_bound},
      {"t1", t1_suite}, {"vsigma-separation", vsigma_separation},
      {"pfilter", pfilter_suite}};
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  const auto begin = std::chrono::steady_clock::now();
  it->second(options, report);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
  return report;
}

}  // namespace tqu::cli
