#include "omegatt/synthesis.hpp"

#include <algorithm>

#include "omegatt/errors.hpp"

namespace omegatt {

ParallelPair pair_of(const CompositionLaw& law) {
  return ParallelPair{law.arity, law.sigma, law.tau};
}

TypePtr law_component_type(const PastingDiagram& pd, int level,
                           const std::vector<TermPtr>& sigma,
                           const std::vector<TermPtr>& tau) {
  if (level == 0) return base_type();
  int n = pd.ambient_dim;
  PastingDiagram d = boundary_iter(pd, n - level);
  Subst src = assignment_of(src_map(d));
  Subst tgt = assignment_of(tgt_map(d));
  TypePtr under =
      subst_type(law_component_type(pd, level - 1, sigma, tau), src);
  return id_type(std::move(under), subst_term(sigma[level - 1], src),
                 subst_term(tau[level - 1], tgt));
}

namespace {

Check check_components(const PastingDiagram& pd,
                       const std::vector<TermPtr>& sigma,
                       const std::vector<TermPtr>& tau, const TermPtr& rho) {
  int n = pd.ambient_dim;
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(tau.size()) != n)
    return Check::fail("law has " + std::to_string(sigma.size()) + "/" +
                       std::to_string(tau.size()) +
                       " components for ambient dimension " +
                       std::to_string(n));
  for (int i = 0; i < n; ++i) {
    Telescope g = gamma(boundary_iter(pd, n - i)).telescope;
    TypePtr ty = law_component_type(pd, i, sigma, tau);
    if (Check c = check_term(g, sigma[i], ty); !c)
      return std::move(c).under("sigma[" + std::to_string(i) + "]");
    if (Check c = check_term(g, tau[i], ty); !c)
      return std::move(c).under("tau[" + std::to_string(i) + "]");
  }
  if (rho) {
    Telescope g = gamma(pd).telescope;
    TypePtr ty = law_component_type(pd, n, sigma, tau);
    if (Check c = check_term(g, rho, ty); !c)
      return std::move(c).under("rho");
  }
  return Check::pass();
}

}  // namespace

Check check_law(const CompositionLaw& law) {
  if (!law.rho) return Check::fail("law is missing rho");
  return check_components(law.arity, law.sigma, law.tau, law.rho);
}

Check check_pair(const ParallelPair& pair) {
  return check_components(pair.arity, pair.sigma, pair.tau, nullptr);
}

namespace {

// Variables whose declared types mention any name in `roots`, transitively.
std::vector<std::string> dependents(const Telescope& g,
                                    const std::set<std::string>& roots) {
  std::set<std::string> hit = roots;
  std::vector<std::string> out;
  for (const auto& e : g.entries) {
    if (hit.count(e.name)) continue;
    std::set<std::string> fv;
    free_vars(e.type, fv);
    for (const auto& r : hit)
      if (fv.count(r)) {
        hit.insert(e.name);
        out.push_back(e.name);
        break;
      }
  }
  return out;
}

TermPtr fill_rec(const ParallelPair& pair, RemovalOrder order, int depth) {
  const PastingDiagram& pd = pair.arity;
  int n = pd.ambient_dim;

  if (pd.tree.children.empty()) {
    // point arity: every component must collapse to an iterated reflexivity
    TermPtr x = mk_var(cell_var_name(0, 0));
    for (int i = 0; i < n; ++i) {
      if (!alpha_eq(normalize(pair.sigma[i]), refl_iter(x, i)))
        throw NotCollapsing("sigma[" + std::to_string(i) +
                            "] does not normalize to r^" + std::to_string(i) +
                            "(x) over the point context");
      if (!alpha_eq(normalize(pair.tau[i]), refl_iter(x, i)))
        throw NotCollapsing("tau[" + std::to_string(i) +
                            "] does not normalize to r^" + std::to_string(i) +
                            "(x) over the point context");
    }
    return refl_iter(x, n);
  }

  int k = tree_height(pd.tree);
  auto top = cells(pd, k);
  CellRef c = (order == RemovalOrder::Last) ? top.back() : top.front();

  auto [minus, cmap] = remove_cell(pd, c);
  CollapseMaps cm = collapse_map(pd, c);

  ParallelPair rest;
  rest.arity = minus;
  for (int i = 0; i < n; ++i) {
    rest.sigma.push_back(subst_term(pair.sigma[i], assignment_of(cm.h_src[i])));
    rest.tau.push_back(subst_term(pair.tau[i], assignment_of(cm.h_tgt[i])));
  }
  TermPtr rho_minus = fill_rec(rest, order, depth + 1);

  DiagramContext big = gamma(pd);
  DiagramContext small = gamma(minus);
  CellRef sc = source_cell(pd, c), tc = target_cell(pd, c);
  const std::string& var_s = big.var_of.at(sc);
  const std::string& var_t = big.var_of.at(tc);
  const std::string& var_c = big.var_of.at(c);

  TypePtr goal = law_component_type(pd, n, pair.sigma, pair.tau);

  // everything whose type depends on the eliminated triple goes into the
  // eliminator's telescope
  std::vector<std::string> tele_vars =
      dependents(big.telescope, {var_s, var_t, var_c});

  std::set<std::string> avoid;
  for (const auto& e : big.telescope.entries) avoid.insert(e.name);
  all_names(goal, avoid);
  all_names(rho_minus, avoid);
  std::string d = std::to_string(depth);

  Term::Elim elim;
  elim.over = *big.telescope.lookup(var_s);
  elim.m_lhs = fresh_name("a" + d, avoid);
  elim.m_rhs = fresh_name("b" + d, avoid);
  elim.m_path = fresh_name("p" + d, avoid);
  Subst abstracted;
  abstracted[var_s] = mk_var(elim.m_lhs);
  abstracted[var_t] = mk_var(elim.m_rhs);
  abstracted[var_c] = mk_var(elim.m_path);
  for (size_t i = 0; i < tele_vars.size(); ++i) {
    std::string w = fresh_name("w" + d + "_" + std::to_string(i), avoid);
    elim.m_tele.push_back(
        {w, subst_type(*big.telescope.lookup(tele_vars[i]), abstracted)});
    abstracted[tele_vars[i]] = mk_var(w);
  }
  elim.motive = subst_type(goal, abstracted);

  elim.b_var = fresh_name("z" + d, avoid);
  for (size_t i = 0; i < tele_vars.size(); ++i)
    elim.b_tele.push_back(fresh_name("v" + d + "_" + std::to_string(i), avoid));

  // rename rho_minus from the collapsed context into the branch scope
  std::map<std::string, std::string> to_branch;
  for (const auto& [e, img] : cmap.map) {
    const std::string& from = small.var_of.at(e);
    const std::string& to = big.var_of.at(img);
    if (img == sc) {
      to_branch[from] = elim.b_var;
    } else {
      auto it = std::find(tele_vars.begin(), tele_vars.end(), to);
      to_branch[from] = (it == tele_vars.end())
                            ? to
                            : elim.b_tele[it - tele_vars.begin()];
    }
  }
  Subst branch_subst;
  for (const auto& [from, to] : to_branch)
    if (from != to) branch_subst[from] = mk_var(to);
  elim.branch = subst_term(rho_minus, branch_subst);

  elim.lhs = mk_var(var_s);
  elim.rhs = mk_var(var_t);
  elim.path = mk_var(var_c);
  for (const auto& v : tele_vars) elim.tail.push_back(mk_var(v));
  return mk_elim(std::move(elim));
}

}  // namespace

TermPtr fill(const ParallelPair& pair, RemovalOrder order) {
  int n = pair.arity.ambient_dim;
  if (static_cast<int>(pair.sigma.size()) != n ||
      static_cast<int>(pair.tau.size()) != n)
    throw DimMismatch("parallel pair has " + std::to_string(pair.sigma.size()) +
                      "/" + std::to_string(pair.tau.size()) +
                      " components for ambient dimension " + std::to_string(n));
  return fill_rec(pair, order, 0);
}

CompositionLaw canonical_law(const PastingDiagram& pd, RemovalOrder order) {
  int n = pd.ambient_dim;
  CompositionLaw law;
  law.arity = pd;
  for (int i = 0; i < n; ++i) {
    ParallelPair lower{boundary_iter(pd, n - i), law.sigma, law.tau};
    TermPtr t = fill(lower, order);
    law.sigma.push_back(t);
    law.tau.push_back(t);
  }
  law.rho = fill(ParallelPair{pd, law.sigma, law.tau}, order);
  return law;
}

CompositionLaw src_law(const CompositionLaw& law) {
  int n = law.arity.ambient_dim;
  if (n == 0) throw DimOutOfRange("boundary law of a 0-law");
  CompositionLaw out;
  out.arity = boundary(law.arity);
  out.sigma.assign(law.sigma.begin(), law.sigma.end() - 1);
  out.tau.assign(law.tau.begin(), law.tau.end() - 1);
  out.rho = law.sigma.back();
  return out;
}

CompositionLaw tgt_law(const CompositionLaw& law) {
  int n = law.arity.ambient_dim;
  if (n == 0) throw DimOutOfRange("boundary law of a 0-law");
  CompositionLaw out;
  out.arity = boundary(law.arity);
  out.sigma.assign(law.sigma.begin(), law.sigma.end() - 1);
  out.tau.assign(law.tau.begin(), law.tau.end() - 1);
  out.rho = law.tau.back();
  return out;
}

bool law_equal(const CompositionLaw& a, const CompositionLaw& b) {
  if (!(a.arity == b.arity)) return false;
  if (a.sigma.size() != b.sigma.size() || a.tau.size() != b.tau.size())
    return false;
  for (size_t i = 0; i < a.sigma.size(); ++i)
    if (!alpha_eq(a.sigma[i], b.sigma[i]) || !alpha_eq(a.tau[i], b.tau[i]))
      return false;
  if (!a.rho != !b.rho) return false;
  return !a.rho || alpha_eq(a.rho, b.rho);
}

}  // namespace omegatt
