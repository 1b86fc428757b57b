#include "omegatt/suite.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "omegatt/errors.hpp"
#include "omegatt/lawfile.hpp"

namespace omegatt {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::shared_ptr<const Corpus> build_corpus(int max_cells, int max_dim,
                                           int jobs) {
  auto corpus = std::make_shared<Corpus>();
  corpus->max_cells = max_cells;
  corpus->max_dim = max_dim;
  corpus->diagrams = enumerate_diagrams(max_cells, max_dim);
  int count = static_cast<int>(corpus->diagrams.size());
  corpus->laws.resize(count);
  std::vector<std::string> errors(count);

  auto synth = [&](int i) {
    try {
      corpus->laws[i] = canonical_law(corpus->diagrams[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  if (jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < count; ++i) synth(i);
#else
    for (int i = 0; i < count; ++i) synth(i);
#endif
  } else {
    for (int i = 0; i < count; ++i) synth(i);
  }
  for (int i = 0; i < count; ++i)
    if (!errors[i].empty())
      throw error("law synthesis failed over " +
                  render_tree(corpus->diagrams[i]) + ": " + errors[i]);

  for (int i = 0; i < count; ++i) {
    const CompositionLaw& law = corpus->laws[i];
    std::string where = render_tree(law.arity);
    int n = law.arity.ambient_dim;
    for (int lvl = 0; lvl < n; ++lvl)
      corpus->terms.push_back(
          {"sigma[" + std::to_string(lvl) + "] of " + where,
           gamma(boundary_iter(law.arity, n - lvl)).telescope, law.sigma[lvl],
           law_component_type(law.arity, lvl, law.sigma, law.tau)});
    corpus->terms.push_back(
        {"rho of " + where, gamma(law.arity).telescope, law.rho,
         law_component_type(law.arity, n, law.sigma, law.tau)});
  }
  return corpus;
}

std::vector<AssocInstance> assoc_instances(int max_cells) {
  PastingDiagram bin = parse_tree("[[],[]]");
  PastingDiagram tern = parse_tree("[[],[],[]]");
  CompositionLaw binary = canonical_law(bin);
  CompositionLaw ternary = canonical_law(tern);
  CompositionLaw whisk = canonical_law(parse_tree("[[]]@2"));
  CompositionLaw twocell = canonical_law(parse_tree("[[[]]]"));
  CellRef first1{{0}, 0}, second1{{1}, 0};

  auto with = [](std::map<CellRef, CompositionLaw> base, const CellRef& c,
                 const CompositionLaw& law) {
    base[c] = law;
    return base;
  };

  std::vector<AssocInstance> all;
  auto add = [&](std::string desc, CompositionLaw outer,
                 std::map<CellRef, CompositionLaw> l1,
                 std::map<CellRef, CompositionLaw> l2, int composite_cells) {
    if (composite_cells <= max_cells)
      all.push_back({std::move(desc), std::move(outer), std::move(l1),
                     std::move(l2)});
  };

  add("bin(bin,id);ids", binary,
      with(identity_law_labels(bin), first1, binary),
      identity_law_labels(tern), 7);
  add("bin(id,bin);ids", binary,
      with(identity_law_labels(bin), second1, binary),
      identity_law_labels(tern), 7);
  add("bin(ids);(bin,id)", binary, identity_law_labels(bin),
      with(identity_law_labels(bin), first1, binary), 7);
  add("bin(ids);(id,bin)", binary, identity_law_labels(bin),
      with(identity_law_labels(bin), second1, binary), 7);
  add("bin(ids);ids", binary, identity_law_labels(bin),
      identity_law_labels(bin), 5);
  add("tern(ids);ids", ternary, identity_law_labels(tern),
      identity_law_labels(tern), 7);
  add("id1(bin);ids", identity_law(1), single_label(binary),
      identity_law_labels(bin), 5);
  add("id1(bin);(bin,id)", identity_law(1), single_label(binary),
      with(identity_law_labels(bin), first1, binary), 7);
  add("whisk(bin);ids", whisk,
      with(identity_law_labels(whisk.arity), first1, binary),
      identity_law_labels(PastingDiagram{bin.tree, 2}), 5);
  add("whisk(ids);(bin)", whisk, identity_law_labels(whisk.arity),
      with(identity_law_labels(whisk.arity), first1, binary), 5);
  add("twocell(ids);ids", twocell, identity_law_labels(twocell.arity),
      identity_law_labels(twocell.arity), 5);
  add("id2(twocell);ids", identity_law(2), single_label(twocell),
      identity_law_labels(twocell.arity), 5);
  return all;
}

namespace {

using CorpusPtr = std::shared_ptr<const Corpus>;

Check expect(bool cond, const std::string& why) {
  return cond ? Check::pass() : Check::fail(why);
}

std::vector<SuiteInstance> per_diagram(
    const CorpusPtr& corpus, std::function<Check(const PastingDiagram&)> f) {
  std::vector<SuiteInstance> out;
  for (const auto& pd : corpus->diagrams)
    out.push_back({render_tree(pd), [pd, f] { return f(pd); }});
  return out;
}

std::vector<SuiteInstance> per_law(
    const CorpusPtr& corpus, std::function<Check(const CompositionLaw&)> f) {
  std::vector<SuiteInstance> out;
  for (const auto& law : corpus->laws)
    out.push_back({render_tree(law.arity), [law, f] { return f(law); }});
  return out;
}

std::vector<SuiteInstance> per_top_cell(
    const CorpusPtr& corpus,
    std::function<Check(const PastingDiagram&, const CellRef&)> f) {
  std::vector<SuiteInstance> out;
  for (const auto& pd : corpus->diagrams) {
    if (tree_height(pd.tree) == 0) continue;
    for (const CellRef& c : cells(pd, tree_height(pd.tree)))
      out.push_back({render_tree(pd) + " minus " + render_cell(c),
                     [pd, c, f] { return f(pd, c); }});
  }
  return out;
}

Check check_cell_globularity(const PastingDiagram& pd) {
  for (const CellRef& c : all_cells(pd)) {
    if (c.dim() < 2) continue;
    CellRef s = source_cell(pd, c), t = target_cell(pd, c);
    if (!(source_cell(pd, s) == source_cell(pd, t)))
      return Check::fail("ss != st at " + render_cell(c));
    if (!(target_cell(pd, s) == target_cell(pd, t)))
      return Check::fail("ts != tt at " + render_cell(c));
  }
  return Check::pass();
}

Check check_collapse(const PastingDiagram& pd, const CellRef& c) {
  int n = pd.ambient_dim;
  CollapseMaps cm = collapse_map(pd, c);
  if (Check r = check_ctx_map(cm.h); !r) return std::move(r).under("h");
  for (int i = 0; i < n; ++i) {
    if (Check r = check_ctx_map(cm.h_src[i]); !r)
      return std::move(r).under("h_src[" + std::to_string(i) + "]");
    if (Check r = check_ctx_map(cm.h_tgt[i]); !r)
      return std::move(r).under("h_tgt[" + std::to_string(i) + "]");
  }
  PastingDiagram minus = remove_cell(pd, c).first;
  for (int lvl = 1; lvl <= n; ++lvl) {
    const ContextMap& big = (lvl == n) ? cm.h : cm.h_src[lvl];
    PastingDiagram dbig = boundary_iter(pd, n - lvl);
    PastingDiagram dbig_minus = boundary_iter(minus, n - lvl);
    ContextMap lhs_s = compose_ctx_maps(src_map(dbig), big);
    ContextMap rhs_s = compose_ctx_maps(cm.h_src[lvl - 1], src_map(dbig_minus));
    if (!ctx_map_def_eq(lhs_s, rhs_s))
      return Check::fail("src square fails at level " + std::to_string(lvl));
    const ContextMap& bigt = (lvl == n) ? cm.h : cm.h_tgt[lvl];
    ContextMap lhs_t = compose_ctx_maps(tgt_map(dbig), bigt);
    ContextMap rhs_t = compose_ctx_maps(cm.h_tgt[lvl - 1], tgt_map(dbig_minus));
    if (!ctx_map_def_eq(lhs_t, rhs_t))
      return Check::fail("tgt square fails at level " + std::to_string(lvl));
  }
  return Check::pass();
}

Check check_intro_reproduction() {
  PastingDiagram pd = parse_tree("[[],[]]");
  CompositionLaw cr = canonical_law(pd, RemovalOrder::Last);
  CompositionLaw cl = canonical_law(pd, RemovalOrder::First);
  if (Check c = check_law(cr); !c) return std::move(c).under("c_r law");
  if (Check c = check_law(cl); !c) return std::move(c).under("c_l law");
  if (def_eq(cl.rho, cr.rho))
    return Check::fail("the two transitivity terms are definitionally equal");

  ParallelPair pair;
  pair.arity = PastingDiagram{pd.tree, 2};
  pair.sigma = {mk_var("x0_0"), cl.rho};
  pair.tau = {mk_var("x0_0"), cr.rho};
  if (Check c = check_pair(pair); !c) return std::move(c).under("e pair");
  TermPtr e = fill(pair);
  Telescope g = gamma(pair.arity).telescope;
  TypePtr goal = law_component_type(pair.arity, 2, pair.sigma, pair.tau);
  const auto* id = as_id(goal);
  if (!id || !alpha_eq(id->lhs, cl.rho) || !alpha_eq(id->rhs, cr.rho))
    return Check::fail("goal type of e is not Id(-, c_l, c_r)");
  if (Check c = check_term(g, e, goal); !c)
    return std::move(c).under("e term");

  CompositionLaw elaw{pair.arity, pair.sigma, pair.tau, e};
  if (!alpha_eq(src_law(elaw).rho, cl.rho) ||
      !alpha_eq(tgt_law(elaw).rho, cr.rho))
    return Check::fail("boundary laws of e do not recover c_l/c_r");
  return Check::pass();
}

ContextMap induced_label_map(const LabelledLawDiagram& d, const ContextMap& f) {
  std::map<CellRef, PastingDiagram> arities;
  for (const auto& [c, law] : d.labels) arities[c] = law.arity;
  SubstituteResult sub = substitute(d.outer.arity, arities);
  DiagramContext outer_ctx = gamma(d.outer.arity);
  ContextMap g;
  g.source = f.source;
  g.target = outer_ctx.telescope;
  Subst fa = assignment_of(f);
  for (const auto& entry : outer_ctx.telescope.entries) {
    const CellRef& c = outer_ctx.cell_of.at(entry.name);
    TermPtr applied =
        subst_term(transport_term(d.labels.at(c).rho, sub.cell_maps.at(c)), fa);
    g.terms.push_back(applied);
  }
  return g;
}

}  // namespace

std::vector<SuiteProperty> build_suite(const SuiteConfig& cfg,
                                       CorpusPtr corpus) {
  std::vector<SuiteProperty> props;

  props.push_back({"cell-globularity",
                   per_diagram(corpus, check_cell_globularity)});

  props.push_back(
      {"boundary-truncation", per_diagram(corpus, [](const PastingDiagram& pd) {
         if (pd.ambient_dim < 2) return Check::pass();
         // direct double truncation, without going through boundary()
         struct Prune {
           static TreeNode to(const TreeNode& t, int h) {
             TreeNode out;
             if (h == 0) return out;
             for (const auto& c : t.children)
               out.children.push_back(to(c, h - 1));
             return out;
           }
         };
         PastingDiagram direct{Prune::to(pd.tree, pd.ambient_dim - 2),
                               pd.ambient_dim - 2};
         return expect(boundary(boundary(pd)) == direct,
                       "double boundary disagrees with double truncation");
       })});

  props.push_back({"remove-cell-count",
                   per_top_cell(corpus, [](const PastingDiagram& pd,
                                           const CellRef& c) {
                     auto [minus, m] = remove_cell(pd, c);
                     if (cell_count(minus) != cell_count(pd) - 2)
                       return Check::fail("cell count does not drop by 2");
                     return validate_removal_map(m, c);
                   })});

  props.push_back(
      {"embed-validate", per_diagram(corpus, [](const PastingDiagram& pd) {
         if (pd.ambient_dim == 0) return Check::pass();
         if (Check c = src_embed(pd).validate(); !c)
           return std::move(c).under("src_embed");
         if (Check c = tgt_embed(pd).validate(); !c)
           return std::move(c).under("tgt_embed");
         return Check::pass();
       })});

  props.push_back(
      {"parse-render-roundtrip",
       per_diagram(corpus, [](const PastingDiagram& pd) {
         std::string s = render_tree(pd);
         if (!(parse_tree(s) == pd))
           return Check::fail("parse(render) is not the identity on " + s);
         if (render_tree(parse_tree(s)) != s)
           return Check::fail("render(parse) changed canonical string " + s);
         return Check::pass();
       })});

  props.push_back(
      {"substitute-identity", per_diagram(corpus, [](const PastingDiagram& pd) {
         SubstituteResult r = substitute(pd, identity_labels(pd));
         if (!(r.composite == pd))
           return Check::fail("identity labels do not reproduce the diagram");
         for (const CellRef& c : all_cells(pd)) {
           CellRef top{std::vector<int>(c.dim(), 0), 0};
           if (!(r.cell_maps.at(c).apply(top) == c))
             return Check::fail("unit cell map misses " + render_cell(c));
         }
         return Check::pass();
       })});

  props.push_back(
      {"gamma-wellformed", per_diagram(corpus, [](const PastingDiagram& pd) {
         return wf_telescope(gamma(pd).telescope);
       })});

  props.push_back(
      {"gamma-parallel-types",
       per_diagram(corpus, [](const PastingDiagram& pd) {
         DiagramContext ctx = gamma(pd);
         for (int k = 1; k <= tree_height(pd.tree); ++k) {
           std::map<std::pair<CellRef, CellRef>, TypePtr> seen;
           for (const CellRef& c : cells(pd, k)) {
             auto key = std::make_pair(source_cell(pd, c), target_cell(pd, c));
             const TypePtr& ty = *ctx.telescope.lookup(ctx.var_of.at(c));
             auto it = seen.find(key);
             if (it == seen.end())
               seen.emplace(key, ty);
             else if (!alpha_eq(it->second, ty))
               return Check::fail("parallel cells typed differently at " +
                                  render_cell(c));
           }
         }
         return Check::pass();
       })});

  props.push_back(
      {"src-tgt-maps-check", per_diagram(corpus, [](const PastingDiagram& pd) {
         if (pd.ambient_dim == 0) return Check::pass();
         if (Check c = check_ctx_map(src_map(pd)); !c)
           return std::move(c).under("src_map");
         if (Check c = check_ctx_map(tgt_map(pd)); !c)
           return std::move(c).under("tgt_map");
         return Check::pass();
       })});

  props.push_back(
      {"ctxmap-coglobularity",
       per_diagram(corpus, [](const PastingDiagram& pd) {
         if (pd.ambient_dim < 2) return Check::pass();
         PastingDiagram b = boundary(pd);
         ContextMap ss = compose_ctx_maps(src_map(b), src_map(pd));
         ContextMap st = compose_ctx_maps(src_map(b), tgt_map(pd));
         ContextMap ts = compose_ctx_maps(tgt_map(b), src_map(pd));
         ContextMap tt = compose_ctx_maps(tgt_map(b), tgt_map(pd));
         if (!ctx_map_def_eq(ss, st))
           return Check::fail("src.src != src.tgt");
         if (!ctx_map_def_eq(ts, tt))
           return Check::fail("tgt.src != tgt.tgt");
         return Check::pass();
       })});

  props.push_back({"collapse-maps", per_top_cell(corpus, check_collapse)});

  props.push_back(
      {"initial-maps-check", per_diagram(corpus, [](const PastingDiagram& pd) {
         ContextMap f = initial_map(gamma(pd).telescope);
         return check_ctx_map(f);
       })});

  props.push_back({"canonical-law-check",
                   per_law(corpus, [](const CompositionLaw& law) {
                     return check_law(law);
                   })});

  props.push_back(
      {"initiality-collapse", per_law(corpus, [](const CompositionLaw& law) {
         int n = law.arity.ambient_dim;
         ContextMap f = initial_map(gamma(law.arity).telescope);
         TermPtr applied = apply_law(law, f);
         // substitution commutes with typing: rho[f] : T[f] over (x : X)
         TypePtr ty = subst_type(law_component_type(law.arity, n, law.sigma,
                                                    law.tau),
                                 assignment_of(f));
         if (Check c = check_term(f.source, applied, ty); !c)
           return std::move(c).under("typing of the substituted filler");
         TermPtr expected = refl_iter(mk_var("x0_0"), n);
         TermPtr nf = normalize(applied);
         return expect(render_term(nf) == render_term(expected),
                       "law applied along the initial map normalizes to " +
                           render_term(nf) + ", expected " +
                           render_term(expected));
       })});

  {
    std::vector<SuiteInstance> base;
    for (int n = 0; n <= 4; ++n)
      base.push_back({"point@" + std::to_string(n), [n] {
                        PastingDiagram pd{TreeNode{}, n};
                        CompositionLaw law = canonical_law(pd);
                        TermPtr expected = refl_iter(mk_var("x0_0"), n);
                        if (render_term(law.rho) != render_term(expected))
                          return Check::fail("filler over the point is " +
                                             render_term(law.rho));
                        for (int i = 0; i < n; ++i)
                          if (render_term(law.sigma[i]) !=
                              render_term(refl_iter(mk_var("x0_0"), i)))
                            return Check::fail("lower datum not exact at " +
                                               std::to_string(i));
                        return Check::pass();
                      }});
    props.push_back({"base-case-exactness", std::move(base)});
  }

  {
    std::vector<SuiteInstance> subj, conf;
    for (const auto& at : corpus->terms) {
      subj.push_back({at.desc, [at] {
                        if (Check c = check_term(at.context, at.term, at.type);
                            !c)
                          return std::move(c).under("before normalization");
                        TermPtr nf = normalize(at.term);
                        if (Check c = check_term(at.context, nf, at.type); !c)
                          return std::move(c).under("after normalization");
                        return Check::pass();
                      }});
      conf.push_back({at.desc, [at] {
                        Fuel f1 = default_fuel(), f2 = default_fuel();
                        TermPtr outer =
                            normalize(at.term, Strategy::Outermost, f1);
                        TermPtr inner =
                            normalize(at.term, Strategy::Innermost, f2);
                        return expect(alpha_eq(outer, inner),
                                      "strategies disagree");
                      }});
    }
    props.push_back({"subject-reduction", std::move(subj)});
    props.push_back({"confluence-two-strategies", std::move(conf)});
  }

  props.push_back(
      {"defeq-congruence", per_law(corpus, [](const CompositionLaw& law) {
         if (!def_eq(law.rho, law.rho)) return Check::fail("not reflexive");
         TermPtr nf = normalize(law.rho);
         if (!def_eq(law.rho, nf) || !def_eq(nf, law.rho))
           return Check::fail("not symmetric across a reduction");
         TermPtr nnf = normalize(nf);
         if (def_eq(law.rho, nf) && def_eq(nf, nnf) && !def_eq(law.rho, nnf))
           return Check::fail("not transitive");
         // congruence under a collapsing substitution
         ContextMap f = initial_map(gamma(law.arity).telescope);
         Subst s = assignment_of(f);
         TermPtr a = subst_term(law.rho, s);
         TermPtr b = subst_term(nf, s);
         return expect(def_eq(a, b),
                       "def_eq is not a congruence under substitution");
       })});

  props.push_back(
      {"law-boundary-globularity",
       per_law(corpus, [](const CompositionLaw& law) {
         if (law.arity.ambient_dim < 2) return Check::pass();
         if (!law_equal(src_law(src_law(law)), src_law(tgt_law(law))))
           return Check::fail("src.src != src.tgt");
         if (!law_equal(tgt_law(src_law(law)), tgt_law(tgt_law(law))))
           return Check::fail("tgt.src != tgt.tgt");
         return Check::pass();
       })});

  props.push_back({"unit-axioms", per_law(corpus, check_unit_axioms)});

  {
    std::vector<SuiteInstance> inst;
    for (const auto& a : assoc_instances(cfg.max_cells))
      inst.push_back({a.desc, [a] {
                        return check_assoc_instance(a.outer, a.labels1,
                                                    a.labels2);
                      }});
    props.push_back({"assoc-instances", std::move(inst)});
  }

  {
    std::vector<SuiteInstance> inst;
    for (const auto& a : assoc_instances(cfg.max_cells)) {
      inst.push_back(
          {a.desc + " arity", [a] {
             LabelledLawDiagram d{a.outer, a.labels1};
             CompositionLaw composed = compose_laws(d);
             std::map<CellRef, PastingDiagram> arities;
             for (const auto& [c, law] : a.labels1) arities[c] = law.arity;
             PastingDiagram expected =
                 substitute(a.outer.arity, arities).composite;
             return expect(composed.arity == expected,
                           "composite arity differs from the pasting-level "
                           "substitute");
           }});
      inst.push_back({a.desc + " check", [a] {
                        return check_law(
                            compose_laws(LabelledLawDiagram{a.outer, a.labels1}));
                      }});
    }
    props.push_back({"compose-type-preservation", std::move(inst)});
  }

  {
    std::vector<SuiteInstance> inst;
    auto some = assoc_instances(std::min(cfg.max_cells, 7));
    for (size_t i = 0; i < some.size(); i += 3) {
      const auto& a = some[i];
      inst.push_back(
          {a.desc, [a] {
             LabelledLawDiagram d{a.outer, a.labels1};
             CompositionLaw m = compose_laws(d);
             ContextMap f = initial_map(gamma(m.arity).telescope);
             TermPtr lhs = apply_law(m, f);
             ContextMap g = induced_label_map(d, f);
             if (Check c = check_ctx_map(g); !c)
               return std::move(c).under("induced label map");
             TermPtr rhs = apply_law(d.outer, g);
             return expect(def_eq(lhs, rhs),
                           "action does not commute with composition");
           }});
    }
    props.push_back({"apply-compose-coherence", std::move(inst)});
  }

  props.push_back({"intro-reproduction",
                   {{"[[],[]] transitivity pair", check_intro_reproduction}}});

  props.push_back(
      {"determinism", per_diagram(corpus, [](const PastingDiagram& pd) {
         std::string a = render_law_text(canonical_law(pd));
         std::string b = render_law_text(canonical_law(pd));
         return expect(a == b, "two syntheses differ byte-wise");
       })});

  return props;
}

std::vector<PropertyResult> run_properties(
    const std::vector<SuiteProperty>& props, int jobs) {
  std::vector<PropertyResult> results;
  for (const auto& prop : props) {
    PropertyResult r;
    r.name = prop.name;
    r.instances = static_cast<int>(prop.instances.size());
    int count = r.instances;
    std::vector<Check> checks(count);
    std::vector<double> times(count, 0.0);

    auto run_one = [&](int i) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        checks[i] = prop.instances[i].run();
      } catch (const std::exception& e) {
        checks[i] = Check::fail(e.what());
      }
      times[i] = ms_since(t0);
    };

    if (jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (int i = 0; i < count; ++i) run_one(i);
#else
      for (int i = 0; i < count; ++i) run_one(i);
#endif
    } else {
      for (int i = 0; i < count; ++i) run_one(i);
    }

    for (int i = 0; i < count; ++i) {
      if (checks[i]) {
        r.passed++;
      } else {
        r.failures.push_back(prop.instances[i].desc + ": " +
                             checks[i].message());
      }
      r.max_ms = std::max(r.max_ms, times[i]);
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_table(const std::vector<PropertyResult>& results) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "%-28s %9s %9s %10s\n", "property",
                "instances", "passed", "max-ms");
  out += line;
  int total = 0, passed = 0;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-28s %9d %9d %10.2f\n", r.name.c_str(),
                  r.instances, r.passed, r.max_ms);
    out += line;
    total += r.instances;
    passed += r.passed;
  }
  std::snprintf(line, sizeof line, "%s: %d/%d instances passed\n",
                passed == total ? "PASS" : "FAIL", passed, total);
  out += line;
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (r.passed != r.instances) return false;
  return true;
}

}  // namespace omegatt
