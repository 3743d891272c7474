#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "suites.hpp"
#include "tqu/omega/upset.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "tqu");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tqu::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TQU_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("piles command") {
  CHECK(run({"piles", "fin{1,2,3,5,6,9}"}).out == "[1,3] [5,6] [9,9]\n");
  CHECK(run({"piles", "up(prefix=,period=1)"}).out == "infinite run from 0\n");
  CHECK(run({"piles", "fin{}"}).out == "no piles\n");
  const auto j = nlohmann::json::parse(run({"piles", "up(prefix=,period=10)", "--json"}).out);
  CHECK(j["tail"]["kind"] == "periodic");
  const auto bad = run({"piles", "fin{1,"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot parse") != std::string::npos);
  CHECK(run({"piles"}).code == 2);
}

TEST_CASE("admissible command") {
  CHECK(run({"admissible", "up(prefix=,period=1000)", "up(prefix=,period=10)"}).out == "admissible k=1\n");
  CHECK(run({"admissible", "up(prefix=,period=10)", "up(prefix=,period=1)"}).out ==
        "not admissible: infinite run from 0\n");
  CHECK(nlohmann::json::parse(run({"admissible", "fin{}", "fin{3}", "--json"}).out)["k"] == 0);
}

TEST_CASE("separate command") {
  const auto d = run({"separate", data("principal_evens.json"), data("frechet.json"), "--model=D1"});
  CHECK(d.code == 0);
  CHECK(d.out == "distinct: up(prefix=,period=10)\n");
  CHECK(run({"separate", data("principal_evens.json"), data("principal_evens.json")}).out == "inconclusive\n");
  CHECK(run({"separate", data("trivial.json"), data("frechet.json")}).out == "inconclusive\n");
  CHECK(run({"separate", data("improper.json"), data("frechet.json")}).code == 2);
  CHECK(run({"separate", data("missing.json"), data("frechet.json")}).code == 2);
  CHECK(run({"separate", data("trivial.json"), data("frechet.json"), "--model=D3"}).code == 2);
}

TEST_CASE("pfilter-check command") {
  const auto r = run({"pfilter-check", data("principal_evens.json"), "--budget=1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "counterexample: n=up(prefix=,period=10) z=fin{0}\n");
  const auto f = run({"pfilter-check", data("frechet.json"), "--budget=16,8", "--json"});
  CHECK(nlohmann::json::parse(f.out)["result"] == "pass");
  CHECK(run({"pfilter-check", data("frechet.json"), "--budget=16"}).code == 2);
  CHECK(run({"pfilter-check", data("frechet.json"), "--budget=0,3"}).code == 2);
}

TEST_CASE("verify command") {
  const auto p = run({"verify", "pervin-oracle", "--n_max", "4", "--json"});
  CHECK(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["cases"] == 389);
  CHECK(j["failures"].empty());
  CHECK(j.contains("wall_time_ms"));
  CHECK(run({"verify", "t1"}).out.rfind("suite t1: 2 cases, 0 failures", 0) == 0);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  CHECK(run({"verify", "pervin-oracle", "--n_max", "9"}).code == 2);

  // Fixed seed gives identical reports up to timing.
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("wall_time_ms");
    return j;
  };
  const std::vector<std::string> args{"verify", "intersection-law", "--trials", "50", "--seed", "3", "--json"};
  CHECK(strip(run(args).out) == strip(run(args).out));
}

TEST_CASE("every suite passes with small trial counts") {
  tqu::cli::SuiteOptions o;
  o.trials = 100;
  for (const auto& name : tqu::cli::suite_names()) {
    CAPTURE(name);
    const auto report = tqu::cli::run_suite(name, o);
    CHECK(report.cases > 0);
    CHECK(report.ok());
  }
}

TEST_CASE("enumerate command") {
  const auto r = run({"enumerate", "--n_max", "3", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["counts"][2]["preorder"] == 29);
  CHECK(run({"enumerate", "--n_max", "7"}).code == 2);
  CHECK(run({"enumerate", "--n_max", "2", "--list"}).out.find("n=2: 4 topologies") != std::string::npos);
}

TEST_CASE("printed sets re-parse") {
  const auto value_after = [](const std::string& out, const std::string& key) {
    const auto from = out.find(key) + key.size();
    return out.substr(from, out.find_first_of(" \n", from) - from);
  };
  const auto pf = run({"pfilter-check", data("trivial.json"), "--budget=2,1"}).out;
  const auto sep = run({"separate", data("principal_evens.json"), data("frechet.json")}).out;
  for (const auto& printed : {value_after(pf, "n="), value_after(pf, "z="), value_after(sep, "distinct: ")}) {
    CAPTURE(printed);
    CHECK(tqu::omega::UPSet::parse(printed).to_string() == printed);
  }
}

TEST_SUITE_END();
