#include "omegatt/exporting.hpp"

#include <sstream>

#include "omegatt/errors.hpp"
#include "omegatt/lawfile.hpp"
#include "omegatt/sexpr.hpp"

namespace omegatt {

namespace {

std::string surface_term(const TermPtr& t, const std::string& base);

std::string surface_type(const TypePtr& t, const std::string& base) {
  if (is_base(t)) return base;
  const auto* id = as_id(t);
  return "Id " + surface_type(id->under, base) + " (" +
         surface_term(id->lhs, base) + ") (" + surface_term(id->rhs, base) +
         ")";
}

std::string surface_term(const TermPtr& t, const std::string& base) {
  if (const auto* v = as_var(t)) return v->name;
  if (const auto* r = as_refl(t))
    return "refl (" + surface_term(r->arg, base) + ")";
  const auto* j = as_elim(t);
  std::ostringstream os;
  os << "J (\\" << j->m_lhs << " " << j->m_rhs << " " << j->m_path;
  for (const auto& e : j->m_tele)
    os << " (" << e.name << " : " << surface_type(e.type, base) << ")";
  os << " -> " << surface_type(j->motive, base) << ") (\\" << j->b_var;
  for (const auto& n : j->b_tele) os << " " << n;
  os << " -> " << surface_term(j->branch, base) << ") ("
     << surface_term(j->lhs, base) << ") (" << surface_term(j->rhs, base)
     << ") (" << surface_term(j->path, base) << ")";
  for (const auto& e : j->tail) os << " (" << surface_term(e, base) << ")";
  return os.str();
}

std::string surface_export(const CompositionLaw& law, const std::string& base) {
  std::ostringstream os;
  os << "-- composition law over " << render_tree(law.arity)
     << ", instantiated at the type " << base << "\n";
  os << "-- Id " << base << " a b : identity type; refl : Id " << base
     << " a a;\n";
  os << "-- J (\\x y p ... -> C) (\\z ... -> d) a b q ... : the eliminator\n\n";
  int n = law.arity.ambient_dim;
  for (int i = 0; i <= n; ++i) {
    PastingDiagram d = boundary_iter(law.arity, n - i);
    DiagramContext ctx = gamma(d);
    std::string name = (i == n) ? "rho" : ("sigma" + std::to_string(i));
    os << "-- context for " << name << (i == n ? "" : ", tau" + std::to_string(i))
       << ":\n";
    for (const auto& e : ctx.telescope.entries)
      os << "--   " << e.name << " : " << surface_type(e.type, base) << "\n";
    TypePtr ty = law_component_type(law.arity, i, law.sigma, law.tau);
    if (i == n) {
      os << "rho : " << surface_type(ty, base) << "\n";
      os << "rho = " << surface_term(law.rho, base) << "\n\n";
    } else {
      os << "sigma" << i << " : " << surface_type(ty, base) << "\n";
      os << "sigma" << i << " = " << surface_term(law.sigma[i], base) << "\n";
      os << "tau" << i << " : " << surface_type(ty, base) << "\n";
      os << "tau" << i << " = " << surface_term(law.tau[i], base) << "\n\n";
    }
  }
  return os.str();
}

}  // namespace

std::string export_law(const CompositionLaw& law, const std::string& type_name,
                       ExportFlavor flavor) {
  if (!is_identifier(type_name))
    throw ParseError("type name must be an identifier: " + type_name);
  for (const auto& e : gamma(law.arity).telescope.entries)
    if (e.name == type_name)
      throw ParseError("type name " + type_name +
                       " clashes with a context variable");
  if (Check c = check_law(law); !c)
    throw error("refusing to export a law that fails checking:\n" +
                c.message());
  if (flavor == ExportFlavor::Native) return render_law_text(law, type_name);
  return surface_export(law, type_name);
}

}  // namespace omegatt
