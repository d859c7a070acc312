#include "twistcalc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace twistcalc {

namespace {

using Body = std::function<void(CaseLog&, const SuiteOptions&)>;

const std::map<std::string, Body>& bodies() {
  static const std::map<std::string, Body> table{
      {"qphase", [](CaseLog& log, const SuiteOptions& o) { check_qphase(log, std::max(o.dim, 7), o.seed); }},
      {"ncalg", [](CaseLog& log, const SuiteOptions& o) { check_ncalg(log, std::max(o.dim, 5), o.seed); }},
      {"tensor",
       [](CaseLog& log, const SuiteOptions& o) {
         check_lambda(log, 5);
         check_antisymmetrizer(log, 5, 4);
         check_contractions(log, 4, 6, 50, o.seed);
         check_metric_epsilon(log, 6);
         check_pairing(log, 5, o.seed);
       }},
      {"haar",
       [](CaseLog& log, const SuiteOptions& o) {
         check_haar_examples(log);
         check_haar_well_defined(log, {3, 5}, 4);
         check_haar_trace_reality(log, {3, 4, 5}, 20, o.seed);
         check_haar_moments(log, {3, 4, 5, 6});
         check_haar_misc(log, 5, o.seed);
       }},
      {"sphere",
       [](CaseLog& log, const SuiteOptions& o) {
         check_sphere_basics(log, 4, o.seed);
         check_stokes(log, {1, 2, 3, 4}, 10, 3, o.seed);
         check_connes_landi(log);
       }},
      {"hodge",
       [](CaseLog& log, const SuiteOptions& o) {
         check_hodge_plane(log, 5, o.seed);
         check_hodge_sphere(log, 4, o.seed);
       }},
      {"chern",
       [](CaseLog& log, const SuiteOptions& o) {
         check_clifford(log, std::max(o.n, 2));
         check_trace_formula(log, 50, o.seed);
         check_projector_curvature(log, o.n, o.seed);
         check_charge(log, o.n);
       }},
      {"oracle",
       [](CaseLog& log, const SuiteOptions& o) {
         check_oracle_model(log, o.dim, o.seed);
         check_commutative_limit(log, 6, o.n);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qphase", "ncalg", "tensor", "haar", "sphere",
                                              "hodge",  "chern", "oracle", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + name);
  OracleOptions oo;
  oo.moduli = opt.moduli;
  oo.seed = opt.seed;
  CaseLog log = opt.oracle ? CaseLog(oo) : CaseLog();
  const auto start = std::chrono::steady_clock::now();
  if (name == "all") {
    for (const auto& [n, body] : bodies()) body(log, opt);
  } else {
    bodies().at(name)(log, opt);
  }
  SuiteReport r;
  r.suite = name;
  r.cases = log.cases();
  r.oracle_cases = log.oracle_cases();
  r.failures = log.failures();
  r.case_names = log.case_names();
  r.failures.insert(r.failures.end(), log.oracle_failures().begin(), log.oracle_failures().end());
  r.worst_oracle_magnitude = log.worst_oracle_magnitude();
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.seed = opt.seed;
  return r;
}

}  // namespace twistcalc
