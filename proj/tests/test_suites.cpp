#include <doctest.h>

#include "twistcalc/suites.hpp"

using namespace twistcalc;

TEST_SUITE("cli") {
  TEST_CASE("named suites run green and contain their headline cases") {
    SuiteOptions o;
    const SuiteReport chern = run_suite("chern", o);
    CHECK(chern.pass());
    CHECK(chern.case_names.count("charge = 1 n=2") == 1);
    const SuiteReport haar = run_suite("haar", o);
    CHECK(haar.pass());
    CHECK(haar.case_names.count("h(c) = 1") == 1);
    CHECK(haar.oracle_cases > 0);
    CHECK_THROWS_AS((void)run_suite("nope", o), std::invalid_argument);
  }

  TEST_CASE("reports are deterministic for a fixed seed") {
    SuiteOptions o;
    o.seed = 5;
    const SuiteReport a = run_suite("sphere", o), b = run_suite("sphere", o);
    CHECK(a.cases == b.cases);
    CHECK(a.oracle_cases == b.oracle_cases);
    CHECK(a.worst_oracle_magnitude == b.worst_oracle_magnitude);
    CHECK(a.case_names == b.case_names);
  }

  TEST_CASE("run_suite all") {
    const SuiteReport r = run_suite("all", {});
    for (const auto& f : r.failures) MESSAGE(f.name);
    CHECK(r.pass());
    CHECK(r.cases > 100000);
  }
}
