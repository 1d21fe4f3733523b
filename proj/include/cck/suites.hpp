#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cck/json_io.hpp"

namespace cck {

struct SuiteFailure {
  std::string check;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  std::vector<json> beds;  // resolved (cartan, word) pairs the suite ran on
  bool ok() const { return failures.empty(); }
  json to_json() const;
};

struct SuiteConfig {
  std::optional<CartanDatum> datum;  // restrict a suite to one test bed
  std::optional<Word> word;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  SearchBudget budget;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// The ten acceptance criteria with their parameters pinned; k is 1-based.
SuiteReport run_acceptance_criterion(int k, const SuiteConfig& cfg);
std::string acceptance_criterion_label(int k);

}  // namespace cck
