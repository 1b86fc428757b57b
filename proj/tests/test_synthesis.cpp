#include <doctest.h>

#include "omegatt/errors.hpp"
#include "omegatt/lawfile.hpp"
#include "omegatt/synthesis.hpp"

using namespace omegatt;

TEST_CASE("fill: degenerate base cases return exact reflexivity towers") {
  for (int n = 0; n <= 4; ++n) {
    ParallelPair pair;
    pair.arity = PastingDiagram{TreeNode{}, n};
    for (int i = 0; i < n; ++i) {
      pair.sigma.push_back(refl_iter(mk_var("x0_0"), i));
      pair.tau.push_back(refl_iter(mk_var("x0_0"), i));
    }
    TermPtr rho = fill(pair);
    CHECK(render_term(rho) == render_term(refl_iter(mk_var("x0_0"), n)));
  }
}

TEST_CASE("fill: arrow diagram produces a checking eliminator") {
  ParallelPair pair;
  pair.arity = parse_tree("[[]]");
  pair.sigma = {mk_var("x0_0")};
  pair.tau = {mk_var("x0_0")};
  TermPtr rho = fill(pair);
  Telescope g = gamma(pair.arity).telescope;
  TypePtr goal = id_type(base_type(), mk_var("x0_0"), mk_var("x0_1"));
  CHECK(bool(check_term(g, rho, goal)));
  CHECK(as_elim(rho) != nullptr);

  // collapsing the arrow makes the filler compute to reflexivity
  Subst collapse;
  collapse["x0_1"] = mk_var("x0_0");
  collapse["x1_0"] = mk_refl(mk_var("x0_0"));
  CHECK(alpha_eq(normalize(subst_term(rho, collapse)),
                 mk_refl(mk_var("x0_0"))));
}

TEST_CASE("fill: rejects foreign lower data") {
  ParallelPair pair;
  pair.arity = PastingDiagram{TreeNode{}, 1};
  pair.sigma = {mk_refl(mk_var("x0_0"))};  // not of depth 0
  pair.tau = {mk_var("x0_0")};
  CHECK_THROWS_AS(fill(pair), NotCollapsing);

  ParallelPair short_pair;
  short_pair.arity = parse_tree("[[]]");
  CHECK_THROWS_AS(fill(short_pair), DimMismatch);
}

TEST_CASE("canonical_law: binary composition") {
  CompositionLaw law = canonical_law(parse_tree("[[],[]]"));
  CHECK(bool(check_law(law)));
  CHECK(as_elim(law.rho) != nullptr);  // not a bare variable
  CHECK(alpha_eq(law.sigma[0], mk_var("x0_0")));

  // degenerate identity 1-law
  CompositionLaw unit = canonical_law(parse_tree("[]@1"));
  CHECK(render_term(unit.rho) == "(r x0_0)");
  CHECK(render_term(unit.sigma[0]) == "x0_0");
  CHECK(bool(check_law(unit)));
}

TEST_CASE("canonical_law: whole small corpus checks") {
  for (const auto& pd : enumerate_diagrams(7, 2)) {
    CompositionLaw law = canonical_law(pd);
    Check c = check_law(law);
    INFO(render_tree(pd));
    CHECK_MESSAGE(bool(c), c.message());
  }
}

TEST_CASE("canonical_law: first-removal order also checks") {
  for (const auto& pd : enumerate_diagrams(7, 2)) {
    CompositionLaw law = canonical_law(pd, RemovalOrder::First);
    Check c = check_law(law);
    INFO(render_tree(pd));
    CHECK_MESSAGE(bool(c), c.message());
  }
}

TEST_CASE("removal order knob produces distinct transitivity witnesses") {
  PastingDiagram vee = parse_tree("[[],[]]");
  CompositionLaw cr = canonical_law(vee, RemovalOrder::Last);
  CompositionLaw cl = canonical_law(vee, RemovalOrder::First);
  CHECK(bool(check_law(cr)));
  CHECK(bool(check_law(cl)));
  CHECK_FALSE(def_eq(cl.rho, cr.rho));

  // and the filler connects them one dimension up
  ParallelPair pair;
  pair.arity = PastingDiagram{vee.tree, 2};
  pair.sigma = {mk_var("x0_0"), cl.rho};
  pair.tau = {mk_var("x0_0"), cr.rho};
  TermPtr e = fill(pair);
  TypePtr goal = law_component_type(pair.arity, 2, pair.sigma, pair.tau);
  CHECK(bool(check_term(gamma(pair.arity).telescope, e, goal)));
  const auto* id = as_id(goal);
  REQUIRE(id != nullptr);
  CHECK(alpha_eq(id->lhs, cl.rho));
  CHECK(alpha_eq(id->rhs, cr.rho));
}

TEST_CASE("boundary laws") {
  CompositionLaw law = canonical_law(parse_tree("[[],[]]"));
  CHECK(law_equal(src_law(law), tgt_law(law)));  // degenerate lower data

  CompositionLaw two = canonical_law(parse_tree("[[[]]]"));
  CompositionLaw s = src_law(two);
  CHECK(s.arity == parse_tree("[[]]"));
  CHECK(alpha_eq(s.rho, two.sigma[1]));
  CHECK(bool(check_law(s)));
  CHECK_THROWS_AS(src_law(canonical_law(parse_tree("[]"))), DimOutOfRange);

  for (const auto& pd : enumerate_diagrams(7, 3)) {
    if (pd.ambient_dim < 2) continue;
    CompositionLaw l = canonical_law(pd);
    CHECK(law_equal(src_law(src_law(l)), src_law(tgt_law(l))));
    CHECK(law_equal(tgt_law(src_law(l)), tgt_law(tgt_law(l))));
  }
}

TEST_CASE("check_law: rejects wrong endpoints") {
  CompositionLaw law = canonical_law(parse_tree("[[],[]]"));
  law.rho = mk_refl(mk_var("x0_0"));
  CHECK_FALSE(bool(check_law(law)));
}

TEST_CASE("synthesis is deterministic") {
  PastingDiagram pd = parse_tree("[[[]],[]]");
  CHECK(render_law_text(canonical_law(pd)) ==
        render_law_text(canonical_law(pd)));
}
