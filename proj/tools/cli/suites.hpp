#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "tqu/chain/model.hpp"
#include "tqu/filters/pfilter.hpp"

namespace tqu::cli {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 1000;
  filters::Budget budget{16, 8};
  unsigned n_max = 4;
  std::optional<chain::Model> model;  // both models when unset
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Deterministic for fixed options apart from the
/// wall time. Throws InputError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace tqu::cli
