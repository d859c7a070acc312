#pragma once

// Named bundles of check families, run by the CLI and the acceptance binary.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "twistcalc/checks.hpp"

namespace twistcalc {

struct SuiteOptions {
  int dim = 5;
  int n = 2;
  std::uint64_t seed = 42;
  std::vector<int> moduli;  // empty: default primes
  bool oracle = true;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  int oracle_cases = 0;
  std::vector<CaseFailure> failures;
  std::set<std::string> case_names;
  double worst_oracle_magnitude = 0.0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  bool pass() const { return failures.empty(); }
};

/// qphase, ncalg, tensor, haar, sphere, hodge, chern, oracle, all.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace twistcalc
