#include <doctest.h>

#include "omegatt/lawfile.hpp"
#include "omegatt/suite.hpp"

using namespace omegatt;

TEST_CASE("parallel corpus build matches the serial reference") {
  auto serial = build_corpus(7, 2, 1);
  auto parallel = build_corpus(7, 2, 4);
  REQUIRE(serial->laws.size() == parallel->laws.size());
  for (size_t i = 0; i < serial->laws.size(); ++i)
    CHECK(render_law_text(serial->laws[i]) ==
          render_law_text(parallel->laws[i]));
}

TEST_CASE("property runner: parallel results equal serial results") {
  SuiteConfig cfg{5, 2, 1};
  auto corpus = build_corpus(cfg.max_cells, cfg.max_dim, 1);
  auto props = build_suite(cfg, corpus);
  auto serial = run_properties(props, 1);
  auto parallel = run_properties(props, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].passed == parallel[i].passed);
    CHECK(serial[i].instances == parallel[i].instances);
  }
  CHECK(all_passed(serial));
  std::string table = format_table(serial);
  CHECK(table.find("cell-globularity") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("the three-column two-dimensional diagram end to end") {
  // 4 objects, 6 arrows, 3 two-cells; outside the acceptance corpus bound
  PastingDiagram fig = parse_tree("[[[],[]],[[]],[]]");
  CompositionLaw law = canonical_law(fig);
  CHECK(bool(check_law(law)));
  ContextMap f = initial_map(gamma(fig).telescope);
  CHECK(render_term(normalize(apply_law(law, f))) == "(r (r x0_0))");
}

TEST_CASE("degenerate arity whose boundary still contains the removed cell") {
  // height 3 under ambient 4: the level-3 lower data must be pulled back
  // along a genuine collapse, not an identity
  PastingDiagram pd = parse_tree("[[[[]]]]@4");
  CompositionLaw law = canonical_law(pd);
  CHECK(bool(check_law(law)));
  ContextMap f = initial_map(gamma(pd).telescope);
  CHECK(render_term(normalize(apply_law(law, f))) ==
        render_term(refl_iter(mk_var("x0_0"), 4)));
}
