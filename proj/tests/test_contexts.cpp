#include <doctest.h>

#include "omegatt/contexts.hpp"
#include "omegatt/errors.hpp"

using namespace omegatt;

namespace {
const char* kThreeColumns = "[[[],[]],[[]],[]]";
}

TEST_CASE("gamma: transitivity context") {
  DiagramContext ctx = gamma(parse_tree("[[],[]]"));
  REQUIRE(ctx.telescope.size() == 5);
  CHECK(ctx.telescope.entries[0].name == "x0_0");
  CHECK(ctx.telescope.entries[4].name == "x1_1");
  CHECK(render_type(ctx.telescope.entries[3].type) == "(Id X x0_0 x0_1)");
  CHECK(render_type(ctx.telescope.entries[4].type) == "(Id X x0_1 x0_2)");
  CHECK(bool(wf_telescope(ctx.telescope)));
}

TEST_CASE("gamma: sizes and degenerate base") {
  CHECK(gamma(parse_tree("[[[]],[[]]]")).telescope.size() == 9);
  DiagramContext pt = gamma(parse_tree("[]@2"));
  REQUIRE(pt.telescope.size() == 1);
  CHECK(pt.telescope.entries[0].name == "x0_0");
  CHECK(is_base(pt.telescope.entries[0].type));

  DiagramContext wide = gamma(parse_tree(kThreeColumns));
  CHECK(wide.telescope.size() == 13);
  CHECK(bool(wf_telescope(wide.telescope)));
}

TEST_CASE("gamma: parallel cells get alpha-identical types") {
  DiagramContext ctx = gamma(parse_tree("[[[],[]]]"));
  // the two 2-cells are parallel only pairwise; the three parallel 1-cells:
  const TypePtr& a = *ctx.telescope.lookup("x1_0");
  const TypePtr& b = *ctx.telescope.lookup("x1_1");
  const TypePtr& c = *ctx.telescope.lookup("x1_2");
  CHECK(alpha_eq(a, b));
  CHECK(alpha_eq(b, c));
}

TEST_CASE("src and tgt projections") {
  PastingDiagram vee = parse_tree("[[],[]]");
  ContextMap t = tgt_map(vee);
  REQUIRE(t.terms.size() == 1);
  CHECK(render_term(t.terms[0]) == "x0_2");
  ContextMap s = src_map(vee);
  CHECK(render_term(s.terms[0]) == "x0_0");
  CHECK(bool(check_ctx_map(s)));
  CHECK(bool(check_ctx_map(t)));

  PastingDiagram col = parse_tree("[[[],[]]]");
  ContextMap cs = src_map(col);
  REQUIRE(cs.terms.size() == 3);
  CHECK(render_term(cs.terms[0]) == "x0_0");
  CHECK(render_term(cs.terms[1]) == "x0_1");
  CHECK(render_term(cs.terms[2]) == "x1_0");
  ContextMap ct = tgt_map(col);
  CHECK(render_term(ct.terms[2]) == "x1_2");
}

TEST_CASE("coglobularity of projections") {
  for (const auto& pd : enumerate_diagrams(9, 3)) {
    if (pd.ambient_dim < 2) continue;
    PastingDiagram b = boundary(pd);
    CHECK(ctx_map_def_eq(compose_ctx_maps(src_map(b), src_map(pd)),
                         compose_ctx_maps(src_map(b), tgt_map(pd))));
    CHECK(ctx_map_def_eq(compose_ctx_maps(tgt_map(b), src_map(pd)),
                         compose_ctx_maps(tgt_map(b), tgt_map(pd))));
  }
}

TEST_CASE("collapse maps") {
  PastingDiagram vee = parse_tree("[[],[]]");
  CellRef q{{1}, 0};
  CollapseMaps cm = collapse_map(vee, q);
  CHECK(bool(check_ctx_map(cm.h)));
  // target entries: x0_0 x0_1 x0_2 x1_0 x1_1
  CHECK(render_term(cm.h.terms[2]) == "x0_1");
  CHECK(render_term(cm.h.terms[4]) == "(r x0_1)");
  CHECK(render_term(cm.h.terms[0]) == "x0_0");
  CHECK(render_term(cm.h.terms[3]) == "x1_0");

  // one dimension up: a column of two 2-cells
  PastingDiagram col = parse_tree("[[[],[]]]");
  CellRef c2{{0, 1}, 0};
  CollapseMaps cm2 = collapse_map(col, c2);
  CHECK(bool(check_ctx_map(cm2.h)));
  // x1_2 collapses onto x1_1, the removed 2-cell onto r(x1_1)
  size_t i_x12 = 4, i_top = 6;
  CHECK(cm2.h.target.entries[i_x12].name == "x1_2");
  CHECK(render_term(cm2.h.terms[i_x12]) == "x1_1");
  CHECK(cm2.h.target.entries[i_top].name == "x2_1");
  CHECK(render_term(cm2.h.terms[i_top]) == "(r x1_1)");

  CHECK_THROWS_AS(collapse_map(col, CellRef{{0}, 0}), NotTopCell);
}

TEST_CASE("collapse map h is injective away from the collapsed pair") {
  PastingDiagram vee = parse_tree("[[],[]]");
  CellRef q{{1}, 0};
  CollapseMaps cm = collapse_map(vee, q);
  // x0_1 and x0_2 both map to x0_1; everything else is a distinct variable
  std::map<std::string, int> uses;
  for (const auto& t : cm.h.terms)
    if (const auto* v = as_var(t)) uses[v->name]++;
  CHECK(uses.at("x0_1") == 2);
  CHECK(uses.at("x0_0") == 1);
  CHECK(uses.at("x1_0") == 1);
}

TEST_CASE("collapse maps commute with projections") {
  for (const auto& pd : enumerate_diagrams(7, 3)) {
    int h = tree_height(pd.tree);
    if (h == 0) continue;
    int n = pd.ambient_dim;
    for (const CellRef& c : cells(pd, h)) {
      CollapseMaps cm = collapse_map(pd, c);
      PastingDiagram minus = remove_cell(pd, c).first;
      CHECK(bool(check_ctx_map(cm.h)));
      for (int lvl = 1; lvl <= n; ++lvl) {
        const ContextMap& big = (lvl == n) ? cm.h : cm.h_src[lvl];
        ContextMap lhs =
            compose_ctx_maps(src_map(boundary_iter(pd, n - lvl)), big);
        ContextMap rhs = compose_ctx_maps(
            cm.h_src[lvl - 1], src_map(boundary_iter(minus, n - lvl)));
        CHECK(ctx_map_def_eq(lhs, rhs));
      }
    }
  }
}

TEST_CASE("initial maps") {
  ContextMap f = initial_map(gamma(parse_tree("[[]]")).telescope);
  REQUIRE(f.terms.size() == 3);
  CHECK(render_term(f.terms[0]) == "x0_0");
  CHECK(render_term(f.terms[1]) == "x0_0");
  CHECK(render_term(f.terms[2]) == "(r x0_0)");

  ContextMap pt = initial_map(gamma(parse_tree("[]@3")).telescope);
  REQUIRE(pt.terms.size() == 1);
  CHECK(render_term(pt.terms[0]) == "x0_0");

  ContextMap wide = initial_map(gamma(parse_tree(kThreeColumns)).telescope);
  REQUIRE(wide.terms.size() == 13);
  CHECK(render_term(wide.terms.back()) == "(r (r x0_0))");
  CHECK(bool(check_ctx_map(wide)));
}
