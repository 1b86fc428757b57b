#include <doctest.h>

#include "omegatt/contexts.hpp"
#include "omegatt/errors.hpp"
#include "omegatt/operad.hpp"
#include "omegatt/suite.hpp"

using namespace omegatt;

TEST_CASE("identity laws") {
  CompositionLaw id0 = identity_law(0);
  CHECK(render_term(id0.rho) == "x0_0");
  CHECK(id0.sigma.empty());

  CompositionLaw id1 = identity_law(1);
  CHECK(render_term(id1.rho) == "x1_0");
  CHECK(render_term(id1.sigma[0]) == "x0_0");
  CHECK(bool(check_law(id1)));
  CHECK(bool(check_law(identity_law(2))));
  CHECK(bool(check_law(identity_law(3))));

  // the composed views select source and target variables
  Subst src = assignment_of(src_map(id1.arity));
  Subst tgt = assignment_of(tgt_map(id1.arity));
  CHECK(render_term(subst_term(id1.sigma[0], src)) == "x0_0");
  CHECK(render_term(subst_term(id1.tau[0], tgt)) == "x0_1");

  // identity laws are fixed by boundary chains
  CHECK(law_equal(src_law(identity_law(2)), identity_law(1)));
  CHECK(law_equal(src_law(src_law(identity_law(2))), identity_law(0)));
}

TEST_CASE("compose: unit axioms") {
  CompositionLaw binary = canonical_law(parse_tree("[[],[]]"));
  CHECK(bool(check_unit_axioms(binary)));
  CHECK(bool(check_unit_axioms(identity_law(2))));
  CHECK(bool(check_unit_axioms(canonical_law(parse_tree("[[[]]]")))));
}

TEST_CASE("compose: the two ternary bracketings and their associator") {
  PastingDiagram vee = parse_tree("[[],[]]");
  CompositionLaw binary = canonical_law(vee);

  auto left_labels = identity_law_labels(vee);
  left_labels[CellRef{{0}, 0}] = binary;
  CompositionLaw left = compose_laws({binary, left_labels});

  auto right_labels = identity_law_labels(vee);
  right_labels[CellRef{{1}, 0}] = binary;
  CompositionLaw right = compose_laws({binary, right_labels});

  PastingDiagram tern = parse_tree("[[],[],[]]");
  CHECK(left.arity == tern);
  CHECK(right.arity == tern);
  CHECK(bool(check_law(left)));
  CHECK(bool(check_law(right)));
  CHECK_FALSE(def_eq(left.rho, right.rho));

  // the filler provides the associator between them
  ParallelPair pair;
  pair.arity = PastingDiagram{tern.tree, 2};
  pair.sigma = {mk_var("x0_0"), left.rho};
  pair.tau = {mk_var("x0_0"), right.rho};
  TermPtr assoc = fill(pair);
  TypePtr goal = law_component_type(pair.arity, 2, pair.sigma, pair.tau);
  CHECK(bool(check_term(gamma(pair.arity).telescope, assoc, goal)));
}

TEST_CASE("compose: corrupted labels fail before any equality check") {
  PastingDiagram single = parse_tree("[[[]]]");
  CompositionLaw two = canonical_law(single);
  LabelledLawDiagram d{identity_law(2), single_label(two)};
  // break a boundary: the 1-cells claim to be identities
  d.labels[CellRef{{0}, 0}] = identity_law(1);
  CHECK_THROWS_AS(compose_laws(d), ArityMismatch);

  LabelledLawDiagram wrong{identity_law(1), single_label(identity_law(1))};
  wrong.labels[CellRef{{0}, 0}] = identity_law(2);
  CHECK_THROWS_AS(compose_laws(wrong), DimMismatch);
}

TEST_CASE("apply_law") {
  CompositionLaw id1 = identity_law(1);
  Telescope point;
  point.entries.push_back({"a", base_type()});
  ContextMap f;
  f.source = point;
  f.target = gamma(id1.arity).telescope;
  f.terms = {mk_var("a"), mk_var("a"), mk_refl(mk_var("a"))};
  CHECK(alpha_eq(apply_law(id1, f), mk_refl(mk_var("a"))));

  CompositionLaw binary = canonical_law(parse_tree("[[],[]]"));
  ContextMap init = initial_map(gamma(binary.arity).telescope);
  TermPtr applied = apply_law(binary, init);
  CHECK(alpha_eq(normalize(applied), mk_refl(mk_var("x0_0"))));

  // a textbook-style law whose branch returns the carried hypothesis
  Term::Elim e;
  e.over = base_type();
  e.m_lhs = "b";
  e.m_rhs = "c";
  e.m_path = "q";
  e.m_tele = {{"h", id_type(base_type(), mk_var("x0_0"), mk_var("b"))}};
  e.motive = id_type(base_type(), mk_var("x0_0"), mk_var("c"));
  e.b_var = "w";
  e.b_tele = {"hw"};
  e.branch = mk_var("hw");
  e.lhs = mk_var("x0_1");
  e.rhs = mk_var("x0_2");
  e.path = mk_var("x1_1");
  e.tail = {mk_var("x1_0")};
  CompositionLaw textbook = binary;
  textbook.rho = mk_elim(std::move(e));
  REQUIRE(bool(check_law(textbook)));

  // plugging reflexivity into the q entry computes to the p entry
  Telescope g = gamma(parse_tree("[[]]")).telescope;
  ContextMap plug;
  plug.source = g;
  plug.target = gamma(textbook.arity).telescope;
  plug.terms = {mk_var("x0_0"), mk_var("x0_1"), mk_var("x0_1"),
                mk_var("x1_0"), mk_refl(mk_var("x0_1"))};
  CHECK(alpha_eq(normalize(apply_law(textbook, plug)), mk_var("x1_0")));
}

TEST_CASE("unit axioms on a law with distinct sigma and tau sides") {
  // the 2-cell connecting the two transitivity witnesses: its boundary laws
  // differ, so composing it exercises the source- and target-side label
  // chains separately
  PastingDiagram vee = parse_tree("[[],[]]");
  CompositionLaw cl = canonical_law(vee, RemovalOrder::First);
  CompositionLaw cr = canonical_law(vee, RemovalOrder::Last);
  ParallelPair pair{PastingDiagram{vee.tree, 2},
                    {mk_var("x0_0"), cl.rho},
                    {mk_var("x0_0"), cr.rho}};
  CompositionLaw elaw{pair.arity, pair.sigma, pair.tau, fill(pair)};
  REQUIRE(bool(check_law(elaw)));
  CHECK_FALSE(law_equal(src_law(elaw), tgt_law(elaw)));

  CHECK(bool(check_unit_axioms(elaw)));

  // and it collapses along the initial map like everything synthesized here
  ContextMap f = initial_map(gamma(elaw.arity).telescope);
  CHECK(alpha_eq(normalize(apply_law(elaw, f)),
                 refl_iter(mk_var("x0_0"), 2)));
}

TEST_CASE("associativity instances") {
  auto instances = assoc_instances(8);
  CHECK(instances.size() >= 10);
  for (const auto& a : instances) {
    Check c = check_assoc_instance(a.outer, a.labels1, a.labels2);
    INFO(a.desc);
    CHECK_MESSAGE(bool(c), c.message());
  }
}

TEST_CASE("composite arity equals the pasting-level substitute") {
  PastingDiagram vee = parse_tree("[[],[]]");
  CompositionLaw binary = canonical_law(vee);
  auto labels = identity_law_labels(vee);
  labels[CellRef{{0}, 0}] = binary;
  CompositionLaw composed = compose_laws({binary, labels});
  std::map<CellRef, PastingDiagram> arities;
  for (const auto& [c, law] : labels) arities[c] = law.arity;
  CHECK(composed.arity == substitute(vee, arities).composite);
}
