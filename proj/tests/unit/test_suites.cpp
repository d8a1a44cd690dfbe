#include "doctest.h"
#include "eqb/errors.hpp"
#include "eqb/suites.hpp"
#include "../oracles/oracles.hpp"

using namespace eqb;

TEST_CASE("complement search agrees with the oracle") {
  for (const auto& g : pgl_groups(24)) {
    const PGLGroup& p = *g.group->pgl();
    std::vector<CycMatrix> pre;
    for (std::size_t i = 0; i < p.preimage->order(); ++i) pre.push_back(p.preimage->element(i).matrix());
    CAPTURE(g.name);
    CHECK(complement_exists(p) == oracle::has_complement(pre));
    CHECK(complement_exists(p) == g.group->splits());
  }
}

TEST_CASE("small suites pass and are deterministic") {
  SuiteOptions o;
  o.seed = 42;
  o.cases = 2;
  for (const auto& name : {"birkhoff", "roundtrip", "averaging", "sections"}) {
    CAPTURE(name);
    const auto a = run_suite(name, o);
    REQUIRE(a.size() == 1);
    CHECK(a[0].passed());
    CHECK(suite_report(a, o).dump() == suite_report(run_suite(name, o), o).dump());
  }
  o.seed = 43;
  const auto b1 = run_suite("birkhoff", o);
  o.seed = 42;
  CHECK(suite_report(b1, o).dump() != suite_report(run_suite("birkhoff", o), o).dump());
}

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 5);
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), FormatError);
  const std::string table = suite_table(run_suite("birkhoff", SuiteOptions{1, 1, 240}));
  CHECK(table == "birkhoff\tQ(zeta_12)\t1/1\tPASS\n");
}
