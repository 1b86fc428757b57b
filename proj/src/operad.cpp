#include "omegatt/operad.hpp"

#include "omegatt/errors.hpp"

namespace omegatt {

CompositionLaw identity_law(int n) {
  CompositionLaw law;
  law.arity = basic_cell(n);
  for (int i = 0; i < n; ++i) {
    law.sigma.push_back(mk_var(cell_var_name(i, 0)));
    law.tau.push_back(mk_var(cell_var_name(i, 0)));
  }
  law.rho = mk_var(cell_var_name(n, 0));
  return law;
}

Check validate_labels(const LabelledLawDiagram& d) {
  for (const CellRef& c : all_cells(d.outer.arity)) {
    auto it = d.labels.find(c);
    if (it == d.labels.end())
      return Check::fail("ArityMismatch: no label for cell " + render_cell(c));
    const CompositionLaw& lab = it->second;
    if (lab.arity.ambient_dim != c.dim())
      return Check::fail("DimMismatch: label for " + render_cell(c) +
                         " has ambient " +
                         std::to_string(lab.arity.ambient_dim) +
                         ", expected " + std::to_string(c.dim()));
    if (c.dim() >= 1) {
      const CompositionLaw& s = d.labels.at(source_cell(d.outer.arity, c));
      const CompositionLaw& t = d.labels.at(target_cell(d.outer.arity, c));
      if (!law_equal(src_law(lab), s) || !law_equal(tgt_law(lab), t))
        return Check::fail("ArityMismatch: boundary of label at " +
                           render_cell(c) +
                           " disagrees with its endpoints' labels");
    }
  }
  return Check::pass();
}

TermPtr transport_term(const TermPtr& t, const CellMap& m) {
  DiagramContext from = gamma(m.from), to = gamma(m.to);
  Subst s;
  for (const auto& [cell, name] : from.var_of) {
    std::string target = to.var_of.at(m.apply(cell));
    if (target != name) s[name] = mk_var(target);
  }
  return subst_term(t, s);
}

namespace {

// iterated boundary embedding: cells of boundary^times(pd) -> cells of pd
std::map<CellRef, CellRef> embed_chain(const PastingDiagram& pd, int times,
                                       bool target_side) {
  std::map<CellRef, CellRef> chain;
  for (const CellRef& c : all_cells(boundary_iter(pd, times))) chain[c] = c;
  for (int step = times; step >= 1; --step) {
    PastingDiagram d = boundary_iter(pd, step - 1);
    CellMap emb = target_side ? tgt_embed(d) : src_embed(d);
    for (auto& [c, img] : chain) img = emb.apply(img);
  }
  return chain;
}

// one level of the composite: outer component with every cell variable
// replaced by the transported rho of the label sitting under it
TermPtr splice(const PastingDiagram& level_diagram, const TermPtr& component,
               const std::map<CellRef, const CompositionLaw*>& level_labels,
               PastingDiagram* arity_out) {
  std::map<CellRef, PastingDiagram> arities;
  for (const auto& [c, law] : level_labels) arities[c] = law->arity;
  SubstituteResult sub = substitute(level_diagram, arities);
  DiagramContext ctx = gamma(level_diagram);
  Subst s;
  for (const auto& [c, law] : level_labels)
    s[ctx.var_of.at(c)] = transport_term(law->rho, sub.cell_maps.at(c));
  if (arity_out) *arity_out = sub.composite;
  return subst_term(component, s);
}

}  // namespace

CompositionLaw compose_laws(const LabelledLawDiagram& d) {
  if (Check c = validate_labels(d); !c) {
    if (c.message().find("DimMismatch") != std::string::npos)
      throw DimMismatch(c.message());
    throw ArityMismatch(c.message());
  }
  const PastingDiagram& pi = d.outer.arity;
  int n = pi.ambient_dim;

  CompositionLaw out;
  for (int level = 0; level <= n; ++level) {
    PastingDiagram ld = boundary_iter(pi, n - level);
    auto schain = embed_chain(pi, n - level, false);
    auto tchain = embed_chain(pi, n - level, true);
    std::map<CellRef, const CompositionLaw*> slabels, tlabels;
    for (const auto& [c, img] : schain) slabels[c] = &d.labels.at(img);
    for (const auto& [c, img] : tchain) tlabels[c] = &d.labels.at(img);

    if (level == n) {
      out.rho = splice(ld, d.outer.rho, slabels, &out.arity);
    } else {
      out.sigma.push_back(splice(ld, d.outer.sigma[level], slabels, nullptr));
      out.tau.push_back(splice(ld, d.outer.tau[level], tlabels, nullptr));
    }
  }
  return out;
}

TermPtr apply_law(const CompositionLaw& law, const ContextMap& f) {
  Telescope expected = gamma(law.arity).telescope;
  if (!alpha_eq(f.target, expected))
    throw DimMismatch("context map target is not the law's arity context");
  if (Check c = check_ctx_map(f); !c)
    throw DimMismatch("context map fails checking:\n" + c.message());
  return subst_term(law.rho, assignment_of(f));
}

std::map<CellRef, CompositionLaw> identity_law_labels(const PastingDiagram& pd) {
  std::map<CellRef, CompositionLaw> out;
  for (const CellRef& c : all_cells(pd)) out[c] = identity_law(c.dim());
  return out;
}

std::map<CellRef, CompositionLaw> single_label(const CompositionLaw& law) {
  int n = law.arity.ambient_dim;
  std::map<CellRef, CompositionLaw> out;
  PastingDiagram basic = basic_cell(n);
  for (const CellRef& c : all_cells(basic)) {
    CompositionLaw lab = law;
    for (int step = n; step > c.dim(); --step)
      lab = (c.slot == 0) ? src_law(lab) : tgt_law(lab);
    out[c] = std::move(lab);
  }
  return out;
}

Check check_unit_axioms(const CompositionLaw& law) {
  int n = law.arity.ambient_dim;
  {
    LabelledLawDiagram d{identity_law(n), single_label(law)};
    CompositionLaw composed = compose_laws(d);
    if (!law_equal(composed, law))
      return Check::fail("unit axiom fails: identity outer law composed with "
                         "the law is not the law");
  }
  {
    LabelledLawDiagram d{law, identity_law_labels(law.arity)};
    CompositionLaw composed = compose_laws(d);
    if (!law_equal(composed, law))
      return Check::fail("unit axiom fails: composing with identity labels is "
                         "not the law");
  }
  return Check::pass();
}

Check check_assoc_instance(const CompositionLaw& outer,
                           const std::map<CellRef, CompositionLaw>& labels1,
                           const std::map<CellRef, CompositionLaw>& labels2) {
  LabelledLawDiagram first{outer, labels1};
  if (Check c = validate_labels(first); !c) return c;
  CompositionLaw mid = compose_laws(first);

  std::map<CellRef, PastingDiagram> arities1;
  for (const auto& [c, law] : labels1) arities1[c] = law.arity;
  SubstituteResult sub = substitute(outer.arity, arities1);

  // inner-then-outer
  LabelledLawDiagram second{mid, labels2};
  if (Check c = validate_labels(second); !c) return c;
  CompositionLaw lhs = compose_laws(second);

  // flatten: each label composed with its slice of labels2
  std::map<CellRef, CompositionLaw> flat;
  for (const auto& [c, law] : labels1) {
    LabelledLawDiagram inner{law, {}};
    for (const CellRef& e : all_cells(law.arity))
      inner.labels[e] = labels2.at(sub.cell_maps.at(c).apply(e));
    flat[c] = compose_laws(inner);
  }
  CompositionLaw rhs = compose_laws(LabelledLawDiagram{outer, flat});

  if (!(lhs.arity == rhs.arity))
    return Check::fail("associativity instance: arities disagree");
  for (size_t i = 0; i < lhs.sigma.size(); ++i) {
    if (!def_eq(lhs.sigma[i], rhs.sigma[i]))
      return Check::fail("associativity instance: sigma[" + std::to_string(i) +
                         "] differs");
    if (!def_eq(lhs.tau[i], rhs.tau[i]))
      return Check::fail("associativity instance: tau[" + std::to_string(i) +
                         "] differs");
  }
  if (!def_eq(lhs.rho, rhs.rho))
    return Check::fail("associativity instance: rho differs");
  return Check::pass();
}

}  // namespace omegatt
