#include "omegatt/kernel.hpp"

#include <algorithm>
#include <cstdlib>

#include "omegatt/errors.hpp"

namespace omegatt {

TypePtr base_type() {
  static const TypePtr x = std::make_shared<Type>(Type{Type::Base{}});
  return x;
}

TypePtr id_type(TypePtr under, TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Type>(
      Type{Type::Id{std::move(under), std::move(lhs), std::move(rhs)}});
}

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(Term{Term::Var{std::move(name)}});
}

TermPtr mk_refl(TermPtr arg) {
  return std::make_shared<Term>(Term{Term::Refl{std::move(arg)}});
}

TermPtr mk_elim(Term::Elim e) {
  return std::make_shared<Term>(Term{std::move(e)});
}

TermPtr refl_iter(TermPtr t, int k) {
  for (int i = 0; i < k; ++i) t = mk_refl(std::move(t));
  return t;
}

const Term::Var* as_var(const TermPtr& t) { return std::get_if<Term::Var>(&t->node); }
const Term::Refl* as_refl(const TermPtr& t) { return std::get_if<Term::Refl>(&t->node); }
const Term::Elim* as_elim(const TermPtr& t) { return std::get_if<Term::Elim>(&t->node); }
const Type::Id* as_id(const TypePtr& t) { return std::get_if<Type::Id>(&t->node); }
bool is_base(const TypePtr& t) { return std::holds_alternative<Type::Base>(t->node); }

int id_depth(const TypePtr& t) {
  int d = 0;
  const Type* cur = t.get();
  while (const auto* id = std::get_if<Type::Id>(&cur->node)) {
    ++d;
    cur = id->under.get();
  }
  return d;
}

const TypePtr* Telescope::lookup(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e.type;
  return nullptr;
}

bool Telescope::has(const std::string& name) const { return lookup(name) != nullptr; }

Telescope Telescope::extended(std::string name, TypePtr type) const {
  Telescope g = *this;
  g.entries.push_back({std::move(name), std::move(type)});
  return g;
}

// ---------------------------------------------------------------------------
// variables

void free_vars(const TypePtr& t, std::set<std::string>& out);

void free_vars(const TermPtr& t, std::set<std::string>& out) {
  if (const auto* v = as_var(t)) {
    out.insert(v->name);
  } else if (const auto* r = as_refl(t)) {
    free_vars(r->arg, out);
  } else if (const auto* j = as_elim(t)) {
    free_vars(j->over, out);
    free_vars(j->lhs, out);
    free_vars(j->rhs, out);
    free_vars(j->path, out);
    for (const auto& e : j->tail) free_vars(e, out);
    // motive scope
    std::set<std::string> inner;
    for (const auto& e : j->m_tele) free_vars(e.type, inner);
    free_vars(j->motive, inner);
    inner.erase(j->m_lhs);
    inner.erase(j->m_rhs);
    inner.erase(j->m_path);
    for (const auto& e : j->m_tele) inner.erase(e.name);
    out.insert(inner.begin(), inner.end());
    // branch scope
    std::set<std::string> binner;
    free_vars(j->branch, binner);
    binner.erase(j->b_var);
    for (const auto& n : j->b_tele) binner.erase(n);
    out.insert(binner.begin(), binner.end());
  }
}

void free_vars(const TypePtr& t, std::set<std::string>& out) {
  if (const auto* id = as_id(t)) {
    free_vars(id->under, out);
    free_vars(id->lhs, out);
    free_vars(id->rhs, out);
  }
}

void all_names(const TypePtr& t, std::set<std::string>& out);

void all_names(const TermPtr& t, std::set<std::string>& out) {
  if (const auto* v = as_var(t)) {
    out.insert(v->name);
  } else if (const auto* r = as_refl(t)) {
    all_names(r->arg, out);
  } else if (const auto* j = as_elim(t)) {
    all_names(j->over, out);
    out.insert(j->m_lhs);
    out.insert(j->m_rhs);
    out.insert(j->m_path);
    for (const auto& e : j->m_tele) {
      out.insert(e.name);
      all_names(e.type, out);
    }
    all_names(j->motive, out);
    out.insert(j->b_var);
    for (const auto& n : j->b_tele) out.insert(n);
    all_names(j->branch, out);
    all_names(j->lhs, out);
    all_names(j->rhs, out);
    all_names(j->path, out);
    for (const auto& e : j->tail) all_names(e, out);
  }
}

void all_names(const TypePtr& t, std::set<std::string>& out) {
  if (const auto* id = as_id(t)) {
    all_names(id->under, out);
    all_names(id->lhs, out);
    all_names(id->rhs, out);
  }
}

std::string fresh_name(const std::string& base, std::set<std::string>& avoid) {
  std::string name = base;
  while (avoid.count(name)) name += "'";
  avoid.insert(name);
  return name;
}

// ---------------------------------------------------------------------------
// substitution

namespace {

// Renames a binder when it would capture a free variable of the pending
// replacements, and drops it from the substitution (bound occurrences are
// not replaced). `avoid` accumulates every name in sight so renamings stay
// collision-free (the concrete syntax forbids shadowing).
std::string enter_binder(const std::string& name, Subst& s,
                         std::set<std::string>& avoid) {
  s.erase(name);
  std::set<std::string> value_fvs;
  for (const auto& [k, v] : s) free_vars(v, value_fvs);
  if (!value_fvs.count(name)) {
    avoid.insert(name);
    return name;
  }
  std::string renamed = fresh_name(name, avoid);
  s[name] = mk_var(renamed);
  return renamed;
}

std::set<std::string> avoid_set(const TermPtr& t, const Subst& s) {
  std::set<std::string> avoid;
  all_names(t, avoid);
  for (const auto& [k, v] : s) {
    avoid.insert(k);
    all_names(v, avoid);
  }
  return avoid;
}

}  // namespace

TypePtr subst_type(const TypePtr& t, const Subst& s) {
  if (s.empty()) return t;
  if (const auto* id = as_id(t))
    return id_type(subst_type(id->under, s), subst_term(id->lhs, s),
                   subst_term(id->rhs, s));
  return t;
}

TermPtr subst_term(const TermPtr& t, const Subst& s) {
  if (s.empty()) return t;
  if (const auto* v = as_var(t)) {
    auto it = s.find(v->name);
    return it == s.end() ? t : it->second;
  }
  if (const auto* r = as_refl(t)) return mk_refl(subst_term(r->arg, s));

  const auto* j = as_elim(t);
  Term::Elim out;
  out.over = subst_type(j->over, s);
  out.lhs = subst_term(j->lhs, s);
  out.rhs = subst_term(j->rhs, s);
  out.path = subst_term(j->path, s);
  for (const auto& e : j->tail) out.tail.push_back(subst_term(e, s));

  std::set<std::string> avoid = avoid_set(t, s);

  Subst sm = s;
  out.m_lhs = enter_binder(j->m_lhs, sm, avoid);
  out.m_rhs = enter_binder(j->m_rhs, sm, avoid);
  out.m_path = enter_binder(j->m_path, sm, avoid);
  for (const auto& e : j->m_tele) {
    TypePtr ty = subst_type(e.type, sm);
    out.m_tele.push_back({enter_binder(e.name, sm, avoid), std::move(ty)});
  }
  out.motive = subst_type(j->motive, sm);

  Subst sb = s;
  out.b_var = enter_binder(j->b_var, sb, avoid);
  for (const auto& n : j->b_tele)
    out.b_tele.push_back(enter_binder(n, sb, avoid));
  out.branch = subst_term(j->branch, sb);

  return mk_elim(std::move(out));
}

// ---------------------------------------------------------------------------
// alpha-equality

namespace {

struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> frames;

  bool var_eq(const std::string& a, const std::string& b) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      bool la = it->first == a, rb = it->second == b;
      if (la || rb) return la && rb;
    }
    return a == b;
  }
};

bool alpha_term(const TermPtr& a, const TermPtr& b, AlphaEnv& env);

bool alpha_type(const TypePtr& a, const TypePtr& b, AlphaEnv& env) {
  if (is_base(a) && is_base(b)) return true;
  const auto* ia = as_id(a);
  const auto* ib = as_id(b);
  if (!ia || !ib) return false;
  return alpha_type(ia->under, ib->under, env) &&
         alpha_term(ia->lhs, ib->lhs, env) && alpha_term(ia->rhs, ib->rhs, env);
}

bool alpha_term(const TermPtr& a, const TermPtr& b, AlphaEnv& env) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* va = as_var(a)) return env.var_eq(va->name, as_var(b)->name);
  if (const auto* ra = as_refl(a)) return alpha_term(ra->arg, as_refl(b)->arg, env);

  const auto* ja = as_elim(a);
  const auto* jb = as_elim(b);
  if (ja->m_tele.size() != jb->m_tele.size() ||
      ja->b_tele.size() != jb->b_tele.size() ||
      ja->tail.size() != jb->tail.size())
    return false;
  if (!alpha_type(ja->over, jb->over, env)) return false;
  if (!alpha_term(ja->lhs, jb->lhs, env) || !alpha_term(ja->rhs, jb->rhs, env) ||
      !alpha_term(ja->path, jb->path, env))
    return false;
  for (size_t i = 0; i < ja->tail.size(); ++i)
    if (!alpha_term(ja->tail[i], jb->tail[i], env)) return false;

  size_t depth = env.frames.size();
  env.frames.emplace_back(ja->m_lhs, jb->m_lhs);
  env.frames.emplace_back(ja->m_rhs, jb->m_rhs);
  env.frames.emplace_back(ja->m_path, jb->m_path);
  bool ok = true;
  for (size_t i = 0; ok && i < ja->m_tele.size(); ++i) {
    ok = alpha_type(ja->m_tele[i].type, jb->m_tele[i].type, env);
    env.frames.emplace_back(ja->m_tele[i].name, jb->m_tele[i].name);
  }
  ok = ok && alpha_type(ja->motive, jb->motive, env);
  env.frames.resize(depth);
  if (!ok) return false;

  env.frames.emplace_back(ja->b_var, jb->b_var);
  for (size_t i = 0; i < ja->b_tele.size(); ++i)
    env.frames.emplace_back(ja->b_tele[i], jb->b_tele[i]);
  ok = alpha_term(ja->branch, jb->branch, env);
  env.frames.resize(depth);
  return ok;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  AlphaEnv env;
  return alpha_term(a, b, env);
}

bool alpha_eq(const TypePtr& a, const TypePtr& b) {
  AlphaEnv env;
  return alpha_type(a, b, env);
}

bool alpha_eq(const Telescope& a, const Telescope& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.entries[i].name != b.entries[i].name) return false;
    if (!alpha_eq(a.entries[i].type, b.entries[i].type)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// normalization

void Fuel::burn() {
  if (--remaining < 0)
    throw FuelExhausted("normalization step budget exceeded");
}

Fuel default_fuel() {
  static long long budget = [] {
    if (const char* env = std::getenv("OMEGATT_FUEL")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 1000000LL;
  }();
  return Fuel{budget};
}

namespace {

TermPtr contract(const Term::Elim& j, const TermPtr& refl_arg,
                 const std::vector<TermPtr>& tail) {
  Subst s;
  s[j.b_var] = refl_arg;
  for (size_t i = 0; i < j.b_tele.size(); ++i) s[j.b_tele[i]] = tail[i];
  return subst_term(j.branch, s);
}

TermPtr norm_term(const TermPtr& t, Strategy st, Fuel& fuel);

TypePtr norm_type(const TypePtr& t, Strategy st, Fuel& fuel) {
  if (const auto* id = as_id(t))
    return id_type(norm_type(id->under, st, fuel), norm_term(id->lhs, st, fuel),
                   norm_term(id->rhs, st, fuel));
  return t;
}

TermPtr norm_term(const TermPtr& t, Strategy st, Fuel& fuel) {
  if (as_var(t)) return t;
  if (const auto* r = as_refl(t)) return mk_refl(norm_term(r->arg, st, fuel));

  const auto* j = as_elim(t);
  if (st == Strategy::Outermost) {
    TermPtr qn = norm_term(j->path, st, fuel);
    if (const auto* r = as_refl(qn)) {
      fuel.burn();
      return norm_term(contract(*j, r->arg, j->tail), st, fuel);
    }
    Term::Elim out = *j;
    out.over = norm_type(j->over, st, fuel);
    for (auto& e : out.m_tele) e.type = norm_type(e.type, st, fuel);
    out.motive = norm_type(j->motive, st, fuel);
    out.branch = norm_term(j->branch, st, fuel);
    out.lhs = norm_term(j->lhs, st, fuel);
    out.rhs = norm_term(j->rhs, st, fuel);
    out.path = qn;
    for (auto& e : out.tail) e = norm_term(e, st, fuel);
    return mk_elim(std::move(out));
  }

  // innermost: normalize all parts first, then contract if possible
  Term::Elim out = *j;
  out.over = norm_type(j->over, st, fuel);
  for (auto& e : out.m_tele) e.type = norm_type(e.type, st, fuel);
  out.motive = norm_type(j->motive, st, fuel);
  out.branch = norm_term(j->branch, st, fuel);
  out.lhs = norm_term(j->lhs, st, fuel);
  out.rhs = norm_term(j->rhs, st, fuel);
  out.path = norm_term(j->path, st, fuel);
  for (auto& e : out.tail) e = norm_term(e, st, fuel);
  if (const auto* r = as_refl(out.path)) {
    fuel.burn();
    return norm_term(contract(out, r->arg, out.tail), st, fuel);
  }
  return mk_elim(std::move(out));
}

}  // namespace

TermPtr normalize(const TermPtr& t, Strategy strategy, Fuel& fuel) {
  return norm_term(t, strategy, fuel);
}

TypePtr normalize(const TypePtr& t, Strategy strategy, Fuel& fuel) {
  return norm_type(t, strategy, fuel);
}

TermPtr normalize(const TermPtr& t) {
  Fuel fuel = default_fuel();
  return norm_term(t, Strategy::Outermost, fuel);
}

TypePtr normalize_type(const TypePtr& t) {
  Fuel fuel = default_fuel();
  return norm_type(t, Strategy::Outermost, fuel);
}

// ---------------------------------------------------------------------------
// judgements

Check wf_type(const Telescope& g, const TypePtr& a) {
  if (is_base(a)) return Check::pass();
  const auto* id = as_id(a);
  if (Check c = wf_type(g, id->under); !c)
    return std::move(c).under("well-formedness of underlying type");
  if (Check c = check_term(g, id->lhs, id->under); !c)
    return std::move(c).under("left endpoint of Id");
  if (Check c = check_term(g, id->rhs, id->under); !c)
    return std::move(c).under("right endpoint of Id");
  return Check::pass();
}

Check wf_telescope(const Telescope& g) {
  Telescope prefix;
  for (const auto& e : g.entries) {
    if (prefix.has(e.name))
      return Check::fail("duplicate telescope name " + e.name);
    if (Check c = wf_type(prefix, e.type); !c)
      return std::move(c).under("entry " + e.name);
    prefix = prefix.extended(e.name, e.type);
  }
  return Check::pass();
}

namespace {

// fresh copies of motive/branch binders against a context, so that extended
// telescopes never collide with existing names
struct ElimScopes {
  std::string x, y, p, z;
  std::vector<std::string> m_names, b_names;
  std::vector<TypePtr> m_types;  // with renamed binders applied
  TypePtr motive;
  TermPtr branch;
};

ElimScopes open_elim(const Term::Elim& j, const Telescope& g) {
  std::set<std::string> avoid;
  for (const auto& e : g.entries) avoid.insert(e.name);
  // keep generated names clear of everything in the subterms as well
  for (const auto& e : j.m_tele) all_names(e.type, avoid);
  all_names(j.motive, avoid);
  all_names(j.branch, avoid);

  ElimScopes out;
  Subst sm;
  auto open = [&](const std::string& n) {
    std::string nn = avoid.count(n) ? fresh_name(n, avoid)
                                    : (avoid.insert(n), n);
    if (nn != n) sm[n] = mk_var(nn);
    return nn;
  };
  out.x = open(j.m_lhs);
  out.y = open(j.m_rhs);
  out.p = open(j.m_path);
  for (const auto& e : j.m_tele) {
    out.m_types.push_back(subst_type(e.type, sm));
    out.m_names.push_back(open(e.name));
  }
  out.motive = subst_type(j.motive, sm);

  Subst sb;
  auto openb = [&](const std::string& n) {
    std::string nn = avoid.count(n) ? fresh_name(n, avoid)
                                    : (avoid.insert(n), n);
    if (nn != n) sb[n] = mk_var(nn);
    return nn;
  };
  out.z = openb(j.b_var);
  for (const auto& n : j.b_tele) out.b_names.push_back(openb(n));
  out.branch = subst_term(j.branch, sb);
  return out;
}

}  // namespace

Check check_term(const Telescope& g, const TermPtr& t, const TypePtr& a) {
  if (const auto* v = as_var(t)) {
    const TypePtr* ty = g.lookup(v->name);
    if (!ty) return Check::fail("UnboundVariable: " + v->name);
    if (!def_eq_type(g, *ty, a))
      return Check::fail("TypeMismatch: variable " + v->name +
                         " has type " + render_type(*ty) + ", expected " +
                         render_type(a));
    return Check::pass();
  }

  if (const auto* r = as_refl(t)) {
    const auto* id = as_id(a);
    if (!id)
      return Check::fail("TypeMismatch: r(-) forms an Id type, expected " +
                         render_type(a));
    if (Check c = check_term(g, r->arg, id->under); !c)
      return std::move(c).under("argument of r");
    if (!def_eq(g, id->lhs, r->arg, id->under) ||
        !def_eq(g, id->rhs, r->arg, id->under))
      return Check::fail("TypeMismatch: r(" + render_term(r->arg) +
                         ") does not inhabit " + render_type(a));
    return Check::pass();
  }

  const auto* j = as_elim(t);
  if (Check c = wf_type(g, j->over); !c)
    return std::move(c).under("eliminated type of J");
  if (Check c = check_term(g, j->lhs, j->over); !c)
    return std::move(c).under("left endpoint of J");
  if (Check c = check_term(g, j->rhs, j->over); !c)
    return std::move(c).under("right endpoint of J");
  if (Check c = check_term(g, j->path, id_type(j->over, j->lhs, j->rhs)); !c)
    return std::move(c).under("scrutinee path of J");
  if (j->tail.size() != j->m_tele.size() ||
      j->b_tele.size() != j->m_tele.size())
    return Check::fail("MotiveMismatch: telescope arity disagrees");

  ElimScopes sc = open_elim(*j, g);

  // motive: G, x y : A, p : Id A x y, Δ |- C type
  Telescope gm = g.extended(sc.x, j->over).extended(sc.y, j->over);
  gm = gm.extended(sc.p, id_type(j->over, mk_var(sc.x), mk_var(sc.y)));
  for (size_t i = 0; i < sc.m_names.size(); ++i) {
    if (Check c = wf_type(gm, sc.m_types[i]); !c)
      return std::move(c).under("motive telescope entry " + sc.m_names[i]);
    gm = gm.extended(sc.m_names[i], sc.m_types[i]);
  }
  if (Check c = wf_type(gm, sc.motive); !c)
    return std::move(c).under("motive of J");

  // branch: G, z : A, Δ(z,z,r z) |- d : C(z,z,r z)
  Telescope gz = g.extended(sc.z, j->over);
  Subst to_z;
  to_z[sc.x] = mk_var(sc.z);
  to_z[sc.y] = mk_var(sc.z);
  to_z[sc.p] = mk_refl(mk_var(sc.z));
  for (size_t i = 0; i < sc.m_names.size(); ++i) {
    TypePtr ti = subst_type(sc.m_types[i], to_z);
    gz = gz.extended(sc.b_names[i], ti);
    to_z[sc.m_names[i]] = mk_var(sc.b_names[i]);
  }
  if (Check c = check_term(gz, sc.branch, subst_type(sc.motive, to_z)); !c)
    return std::move(c).under(
        "MotiveMismatch: branch does not check at the motive instance "
        "(z, z, r z)");

  // telescope instances
  Subst inst;
  inst[sc.x] = j->lhs;
  inst[sc.y] = j->rhs;
  inst[sc.p] = j->path;
  for (size_t i = 0; i < sc.m_names.size(); ++i) {
    if (Check c = check_term(g, j->tail[i], subst_type(sc.m_types[i], inst)); !c)
      return std::move(c).under("telescope argument " + std::to_string(i) +
                                " of J");
    inst[sc.m_names[i]] = j->tail[i];
  }

  TypePtr result = subst_type(sc.motive, inst);
  if (!def_eq_type(g, result, a))
    return Check::fail("TypeMismatch: J yields " + render_type(result) +
                       ", expected " + render_type(a));
  return Check::pass();
}

bool def_eq(const Telescope&, const TermPtr& t, const TermPtr& u,
            const TypePtr&) {
  return def_eq(t, u);
}

bool def_eq(const TermPtr& t, const TermPtr& u) {
  return alpha_eq(normalize(t), normalize(u));
}

bool def_eq_type(const Telescope&, const TypePtr& a, const TypePtr& b) {
  return def_eq_type(a, b);
}

bool def_eq_type(const TypePtr& a, const TypePtr& b) {
  return alpha_eq(normalize_type(a), normalize_type(b));
}

Check check_ctx_map(const ContextMap& f) {
  if (Check c = wf_telescope(f.source); !c)
    return std::move(c).under("source telescope");
  if (Check c = wf_telescope(f.target); !c)
    return std::move(c).under("target telescope");
  if (f.terms.size() != f.target.size())
    return Check::fail("TypeMismatch: " + std::to_string(f.terms.size()) +
                       " terms for " + std::to_string(f.target.size()) +
                       " target entries");
  Subst partial;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const auto& entry = f.target.entries[i];
    TypePtr expected = subst_type(entry.type, partial);
    if (Check c = check_term(f.source, f.terms[i], expected); !c)
      return std::move(c).under("entry " + std::to_string(i) + " (" +
                                entry.name + ")");
    partial[entry.name] = f.terms[i];
  }
  return Check::pass();
}

ContextMap compose_ctx_maps(const ContextMap& g, const ContextMap& f) {
  if (f.target.size() != g.source.size())
    throw DimMismatch("context map composition endpoints disagree");
  for (size_t i = 0; i < f.target.size(); ++i)
    if (f.target.entries[i].name != g.source.entries[i].name ||
        !alpha_eq(f.target.entries[i].type, g.source.entries[i].type))
      throw DimMismatch("context map composition endpoints disagree at entry " +
                        f.target.entries[i].name);
  Subst s = assignment_of(f);
  ContextMap out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& t : g.terms) out.terms.push_back(subst_term(t, s));
  return out;
}

ContextMap identity_ctx_map(const Telescope& g) {
  ContextMap out;
  out.source = g;
  out.target = g;
  for (const auto& e : g.entries) out.terms.push_back(mk_var(e.name));
  return out;
}

Subst assignment_of(const ContextMap& f) {
  Subst s;
  for (size_t i = 0; i < f.terms.size(); ++i)
    s[f.target.entries[i].name] = f.terms[i];
  return s;
}

bool ctx_map_def_eq(const ContextMap& f, const ContextMap& g) {
  if (!alpha_eq(f.source, g.source) || !alpha_eq(f.target, g.target)) return false;
  if (f.terms.size() != g.terms.size()) return false;
  for (size_t i = 0; i < f.terms.size(); ++i)
    if (!def_eq(f.terms[i], g.terms[i])) return false;
  return true;
}

}  // namespace omegatt
