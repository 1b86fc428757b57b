#include "omegatt/errors.hpp"
#include "omegatt/kernel.hpp"
#include "omegatt/sexpr.hpp"

namespace omegatt {

std::string render_type(const TypePtr& t, const std::string& base_name) {
  if (is_base(t)) return base_name;
  const auto* id = as_id(t);
  return "(Id " + render_type(id->under, base_name) + " " +
         render_term(id->lhs, base_name) + " " +
         render_term(id->rhs, base_name) + ")";
}

std::string render_term(const TermPtr& t, const std::string& base_name) {
  if (const auto* v = as_var(t)) return v->name;
  if (const auto* r = as_refl(t))
    return "(r " + render_term(r->arg, base_name) + ")";

  const auto* j = as_elim(t);
  std::string tele = "(";
  for (size_t i = 0; i < j->m_tele.size(); ++i) {
    if (i) tele += " ";
    tele += "(" + j->m_tele[i].name + " " +
            render_type(j->m_tele[i].type, base_name) + ")";
  }
  tele += ")";
  std::string bnames = "(";
  for (size_t i = 0; i < j->b_tele.size(); ++i) {
    if (i) bnames += " ";
    bnames += j->b_tele[i];
  }
  bnames += ")";
  std::string tails = "(";
  for (size_t i = 0; i < j->tail.size(); ++i) {
    if (i) tails += " ";
    tails += render_term(j->tail[i], base_name);
  }
  tails += ")";
  return "(J " + render_type(j->over, base_name) + " ((" + j->m_lhs + " " +
         j->m_rhs + " " + j->m_path + " " + tele + ") " +
         render_type(j->motive, base_name) + ") ((" + j->b_var + " " + bnames +
         ") " + render_term(j->branch, base_name) + ") " +
         render_term(j->lhs, base_name) + " " + render_term(j->rhs, base_name) +
         " " + render_term(j->path, base_name) + " " + tails + ")";
}

std::string render_telescope(const Telescope& g, const std::string& base_name) {
  std::string out = "(";
  for (size_t i = 0; i < g.entries.size(); ++i) {
    if (i) out += " ";
    out += "(" + g.entries[i].name + " " +
           render_type(g.entries[i].type, base_name) + ")";
  }
  return out + ")";
}

namespace {

[[noreturn]] void bad(const std::string& what, const Sexp& e) {
  throw ParseError(what + " at `" + e.render() + "`");
}

std::string bind_name(const Sexp& e, std::set<std::string>& scope) {
  if (!e.is_atom() || !is_identifier(e.text)) bad("expected binder name", e);
  if (scope.count(e.text))
    throw ParseError("shadowed name " + e.text);
  scope.insert(e.text);
  return e.text;
}

}  // namespace

TypePtr type_from_sexp(const Sexp& e, const std::set<std::string>& scope,
                       const std::string& base_name) {
  if (e.is_atom()) {
    if (e.text == base_name) return base_type();
    bad("expected a type", e);
  }
  if (!e.is_list() || e.items.size() != 4 || !e.items[0].is_atom() ||
      e.items[0].text != "Id")
    bad("expected a type", e);
  return id_type(type_from_sexp(e.items[1], scope, base_name),
                 term_from_sexp(e.items[2], scope, base_name),
                 term_from_sexp(e.items[3], scope, base_name));
}

TermPtr term_from_sexp(const Sexp& e, std::set<std::string> scope,
                       const std::string& base_name) {
  if (e.is_atom()) {
    if (!is_identifier(e.text)) bad("expected a term", e);
    return mk_var(e.text);
  }
  if (!e.is_list() || e.items.empty() || !e.items[0].is_atom())
    bad("expected a term", e);
  const std::string& head = e.items[0].text;
  if (head == "r") {
    if (e.items.size() != 2) bad("r takes one argument", e);
    return mk_refl(term_from_sexp(e.items[1], scope, base_name));
  }
  if (head != "J") bad("unknown term form", e);
  if (e.items.size() != 8) bad("J takes 7 arguments", e);

  Term::Elim out;
  out.over = type_from_sexp(e.items[1], scope, base_name);

  const Sexp& mot = e.items[2];
  if (!mot.is_list() || mot.items.size() != 2 || !mot.items[0].is_list() ||
      mot.items[0].items.size() != 4)
    bad("expected motive ((x y p (tele)) type)", mot);
  std::set<std::string> mscope = scope;
  const auto& mb = mot.items[0].items;
  out.m_lhs = bind_name(mb[0], mscope);
  out.m_rhs = bind_name(mb[1], mscope);
  out.m_path = bind_name(mb[2], mscope);
  if (!mb[3].is_list()) bad("expected motive telescope", mb[3]);
  for (const Sexp& entry : mb[3].items) {
    if (!entry.is_list() || entry.items.size() != 2)
      bad("expected telescope entry (name type)", entry);
    TypePtr ty = type_from_sexp(entry.items[1], mscope, base_name);
    out.m_tele.push_back({bind_name(entry.items[0], mscope), std::move(ty)});
  }
  out.motive = type_from_sexp(mot.items[1], mscope, base_name);

  const Sexp& br = e.items[3];
  if (!br.is_list() || br.items.size() != 2 || !br.items[0].is_list() ||
      br.items[0].items.size() != 2 || !br.items[0].items[1].is_list())
    bad("expected branch ((z (names)) term)", br);
  std::set<std::string> bscope = scope;
  out.b_var = bind_name(br.items[0].items[0], bscope);
  for (const Sexp& n : br.items[0].items[1].items)
    out.b_tele.push_back(bind_name(n, bscope));
  if (out.b_tele.size() != out.m_tele.size())
    bad("branch binders disagree with motive telescope", br);
  out.branch = term_from_sexp(br.items[1], bscope, base_name);

  out.lhs = term_from_sexp(e.items[4], scope, base_name);
  out.rhs = term_from_sexp(e.items[5], scope, base_name);
  out.path = term_from_sexp(e.items[6], scope, base_name);
  if (!e.items[7].is_list()) bad("expected telescope arguments", e.items[7]);
  for (const Sexp& a : e.items[7].items)
    out.tail.push_back(term_from_sexp(a, scope, base_name));
  if (out.tail.size() != out.m_tele.size())
    bad("telescope arguments disagree with motive telescope", e.items[7]);
  return mk_elim(std::move(out));
}

TermPtr parse_term(const std::string& text, const std::set<std::string>& scope,
                   const std::string& base_name) {
  return term_from_sexp(parse_sexp(text), scope, base_name);
}

TypePtr parse_type(const std::string& text, const std::set<std::string>& scope,
                   const std::string& base_name) {
  return type_from_sexp(parse_sexp(text), scope, base_name);
}

Telescope parse_telescope(const std::string& text,
                          const std::string& base_name) {
  Sexp e = parse_sexp(text);
  if (!e.is_list()) throw ParseError("expected a telescope");
  Telescope g;
  std::set<std::string> scope;
  for (const Sexp& entry : e.items) {
    if (!entry.is_list() || entry.items.size() != 2)
      bad("expected telescope entry (name type)", entry);
    TypePtr ty = type_from_sexp(entry.items[1], scope, base_name);
    std::string name = bind_name(entry.items[0], scope);
    g.entries.push_back({std::move(name), std::move(ty)});
  }
  return g;
}

}  // namespace omegatt
