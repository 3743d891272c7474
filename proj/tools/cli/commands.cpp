#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "suites.hpp"
#include "tqu/chain/separation.hpp"
#include "tqu/errors.hpp"
#include "tqu/filters/pfilter.hpp"
#include "tqu/finite/enumerate.hpp"
#include "tqu/finite/json.hpp"
#include "tqu/omega/piles.hpp"

namespace tqu::cli {

namespace {

using nlohmann::json;
using omega::UPSet;

filters::Budget parse_budget(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used_p = 0, used_q = 0;
    const std::string p = text.substr(0, comma), q = text.substr(comma + 1);
    const auto bp = std::stoull(p, &used_p), bq = std::stoull(q, &used_q);
    if (used_p != p.size() || used_q != q.size() || p[0] == '-' || q[0] == '-') throw std::invalid_argument("junk");
    return {bp, bq};
  } catch (const std::logic_error&) {
    throw InputError("--budget expects PREFIX,PERIOD, got '" + text + "'");
  }
}

filters::FilterPresentation read_filter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read filter file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("filter file '" + path + "' is not valid JSON: " + e.what());
  }
  return filters::filter_from_json(j);
}

struct Settings {
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 1000;
  std::string budget;
  unsigned n_max = 4;
  std::string model;
};

chain::Model model_or(const Settings& s, chain::Model fallback) {
  return s.model.empty() ? fallback : chain::parse_model(s.model);
}

int cmd_piles(const Settings& s, const std::string& text, std::ostream& out) {
  const auto d = omega::piles(UPSet::parse(text));
  if (s.json_output) {
    out << d.to_json().dump() << "\n";
  } else {
    out << d.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_admissible(const Settings& s, const std::string& z_text, const std::string& n_text, std::ostream& out) {
  const UPSet z = UPSet::parse(z_text), n = UPSet::parse(n_text);
  const auto r = omega::admissibility(z, n);
  if (s.json_output) {
    json j;
    if (const auto* a = std::get_if<omega::Admissible>(&r)) {
      j = {{"admissible", true}, {"k", a->bound}};
    } else {
      j = {{"admissible", false}, {"pile_start", std::get<omega::NotAdmissible>(r).pile.start}};
    }
    out << j.dump() << "\n";
  } else {
    out << omega::to_string(r) << "\n";
  }
  return kExitOk;
}

int cmd_pfilter_check(const Settings& s, const std::string& path, bool exhaustive, std::ostream& out) {
  const auto f = read_filter(path);
  const auto budget = s.budget.empty() ? filters::Budget{8, 4} : parse_budget(s.budget);
  const auto r = filters::pfilter_check(f, budget, exhaustive);
  if (s.json_output) {
    json j;
    if (const auto* c = std::get_if<filters::CounterExample>(&r)) {
      j = {{"result", "counterexample"}, {"n", c->n.to_string()}, {"z", c->z.to_string()}};
    } else {
      j = {{"result", "pass"}, {"candidates", std::get<filters::Pass>(r).candidates_checked}};
    }
    j["budget"] = {budget.max_prefix, budget.max_period};
    out << j.dump() << "\n";
  } else {
    out << filters::to_string(r) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Settings& s, const std::string& suite, std::ostream& out) {
  SuiteOptions o;
  o.seed = s.seed;
  o.trials = s.trials;
  o.n_max = s.n_max;
  if (!s.budget.empty()) o.budget = parse_budget(s.budget);
  if (!s.model.empty()) o.model = chain::parse_model(s.model);
  const SuiteReport report = run_suite(suite, o);
  if (s.json_output) {
    out << report.to_json().dump() << "\n";
  } else {
    out << report.to_text();
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_separate(const Settings& s, const std::string& p1, const std::string& p2, std::ostream& out) {
  const auto r = chain::separates(read_filter(p1), read_filter(p2), model_or(s, chain::Model::increasing));
  if (s.json_output) {
    json j = {{"result", std::holds_alternative<chain::Distinct>(r) ? "distinct" : "inconclusive"}};
    if (const auto* d = std::get_if<chain::Distinct>(&r)) j["witness"] = d->witness.to_string();
    out << j.dump() << "\n";
  } else {
    out << chain::to_string(r) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Settings& s, bool list, std::ostream& out) {
  if (s.n_max > finite::kEnumerationCeiling) {
    throw ResourceError("n_max may not exceed " + std::to_string(finite::kEnumerationCeiling));
  }
  const finite::EnumerationLimits limits{std::max(s.n_max, 1u)};
  json counts = json::array();
  bool agree = true;
  for (unsigned n = 1; n <= s.n_max; ++n) {
    const auto a = finite::enumerate_topologies(n, limits);
    const auto b = finite::enumerate_topologies_by_closure(n, limits);
    agree &= a.size() == b.size();
    counts.push_back({{"n", n}, {"preorder", a.size()}, {"closure", b.size()}});
    if (!s.json_output) out << "n=" << n << ": " << a.size() << " topologies (closure enumerator: " << b.size() << ")\n";
  }
  json listed = json::array();
  if (list && s.n_max >= 1) {
    for (const auto& t : finite::enumerate_topologies(s.n_max, limits)) {
      if (s.json_output) {
        listed.push_back(finite::to_json(t));
      } else {
        out << t.to_string() << "\n";
      }
    }
  }
  if (s.json_output) {
    json j = {{"counts", counts}, {"agree", agree}};
    if (list) j["topologies"] = listed;
    out << j.dump() << "\n";
  }
  return agree ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-uniformity workbench: finite oracles, ultimately periodic sets, p-filters and chain models"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--json", s.json_output, "Print machine-readable JSON");
  app.add_option("--seed", s.seed, "Seed for randomized suites");
  app.add_option("--trials", s.trials, "Random trials per suite");
  app.add_option("--budget", s.budget, "Candidate bound PREFIX,PERIOD for p-filter searches");
  app.add_option("--n_max", s.n_max, "Largest finite space size");
  app.add_option("--model", s.model, "Countable model: D1 (increasing chain) or D2 (decreasing chain)");

  std::string set_text, z_text, path1, path2, suite;
  bool exhaustive = false, list = false;
  auto* piles = app.add_subcommand("piles", "Pile decomposition of a set");
  piles->add_option("set", set_text, "fin{...} or up(prefix=...,period=...)")->required();
  auto* admissible = app.add_subcommand("admissible", "Is Z admissible for N, and with which bound");
  admissible->add_option("z", z_text)->required();
  admissible->add_option("n", set_text)->required();
  auto* pcheck = app.add_subcommand("pfilter-check", "Search for a violation of the p-filter axiom");
  pcheck->add_option("filter", path1, "JSON filter file")->required();
  pcheck->add_flag("--exhaustive", exhaustive, "Also range N over filter members within the budget");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  auto* separate = app.add_subcommand("separate", "Certify that two filters give different quasi-uniformities");
  separate->add_option("f1", path1)->required();
  separate->add_option("f2", path2)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Count topologies with both enumerators");
  enumerate->add_flag("--list", list, "Also print every topology on n_max points");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*piles) return cmd_piles(s, set_text, out);
    if (*admissible) return cmd_admissible(s, z_text, set_text, out);
    if (*pcheck) return cmd_pfilter_check(s, path1, exhaustive, out);
    if (*verify) return cmd_verify(s, suite, out);
    if (*separate) return cmd_separate(s, path1, path2, out);
    if (*enumerate) return cmd_enumerate(s, list, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tqu::cli
