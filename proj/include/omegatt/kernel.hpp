#ifndef OMEGATT_KERNEL_HPP
#define OMEGATT_KERNEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "omegatt/check.hpp"

namespace omegatt {

struct Type;
struct Term;
using TypePtr = std::shared_ptr<const Type>;
using TermPtr = std::shared_ptr<const Term>;

struct TeleEntry {
  std::string name;
  TypePtr type;
};

// Types of the identity-type fragment over one generic base type:
// the base itself, or Id over a type with two endpoint terms.
struct Type {
  struct Base {};
  struct Id {
    TypePtr under;
    TermPtr lhs, rhs;
  };
  std::variant<Base, Id> node;
};

// Terms: variables, reflexivity r(-), and the eliminator J. The eliminator
// carries its motive explicitly (checking is syntax-directed) and a
// dependent telescope, so instances of the generalized elimination rule are
// single term nodes:
//
//   (J A ((x y p (Δ)) C) ((z (names)) d) a b q (e...))
//
// with Δ a telescope over x y p, C the motive, d the branch over z and the
// Δ entries at (z, z, r z), a b the endpoints, q the scrutinee path, and
// e... instances for Δ.
struct Term {
  struct Var {
    std::string name;
  };
  struct Refl {
    TermPtr arg;
  };
  struct Elim {
    TypePtr over;                    // A
    std::string m_lhs, m_rhs, m_path;  // motive binders x, y, p
    std::vector<TeleEntry> m_tele;   // Δ (types may use x, y, p and earlier entries)
    TypePtr motive;                  // C
    std::string b_var;               // branch binder z
    std::vector<std::string> b_tele; // branch names for the Δ entries
    TermPtr branch;                  // d
    TermPtr lhs, rhs, path;          // a, b, q
    std::vector<TermPtr> tail;       // instances for Δ
  };
  std::variant<Var, Refl, Elim> node;
};

TypePtr base_type();
TypePtr id_type(TypePtr under, TermPtr lhs, TermPtr rhs);
TermPtr mk_var(std::string name);
TermPtr mk_refl(TermPtr arg);
TermPtr mk_elim(Term::Elim e);
// r^k(t)
TermPtr refl_iter(TermPtr t, int k);

const Term::Var* as_var(const TermPtr& t);
const Term::Refl* as_refl(const TermPtr& t);
const Term::Elim* as_elim(const TermPtr& t);
const Type::Id* as_id(const TypePtr& t);
bool is_base(const TypePtr& t);

// nesting depth of Id constructors (0 for the base type)
int id_depth(const TypePtr& t);

// An ordered dependent context. Entry types may refer only to earlier names.
struct Telescope {
  std::vector<TeleEntry> entries;

  const TypePtr* lookup(const std::string& name) const;
  bool has(const std::string& name) const;
  Telescope extended(std::string name, TypePtr type) const;
  size_t size() const { return entries.size(); }
};

// A judgement-checked substitution tuple: one term of the source context per
// entry of the target context.
struct ContextMap {
  Telescope source, target;
  std::vector<TermPtr> terms;
};

using Subst = std::map<std::string, TermPtr>;

void free_vars(const TermPtr& t, std::set<std::string>& out);
void free_vars(const TypePtr& t, std::set<std::string>& out);
// every identifier occurring, bound or free
void all_names(const TermPtr& t, std::set<std::string>& out);
void all_names(const TypePtr& t, std::set<std::string>& out);

std::string fresh_name(const std::string& base, std::set<std::string>& avoid);

// Capture-avoiding simultaneous substitution. Binders clashing with free
// variables of the replacements are renamed deterministically (primes).
TermPtr subst_term(const TermPtr& t, const Subst& s);
TypePtr subst_type(const TypePtr& t, const Subst& s);

bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const TypePtr& a, const TypePtr& b);
bool alpha_eq(const Telescope& a, const Telescope& b);

// --- normalization --------------------------------------------------------

enum class Strategy { Outermost, Innermost };

struct Fuel {
  long long remaining;
  void burn();
};
// 10^6 contractions unless overridden by the OMEGATT_FUEL environment knob.
Fuel default_fuel();

TermPtr normalize(const TermPtr& t, Strategy strategy, Fuel& fuel);
TypePtr normalize(const TypePtr& t, Strategy strategy, Fuel& fuel);
TermPtr normalize(const TermPtr& t);  // outermost, default fuel
TypePtr normalize_type(const TypePtr& t);

// --- judgements ------------------------------------------------------------

Check wf_telescope(const Telescope& g);
Check wf_type(const Telescope& g, const TypePtr& a);
Check check_term(const Telescope& g, const TermPtr& t, const TypePtr& a);

// alpha-equality after normalization; the context and type arguments are the
// judgemental reading, the comparison itself is type-free
bool def_eq(const Telescope& g, const TermPtr& t, const TermPtr& u,
            const TypePtr& a);
bool def_eq(const TermPtr& t, const TermPtr& u);
bool def_eq_type(const Telescope& g, const TypePtr& a, const TypePtr& b);
bool def_eq_type(const TypePtr& a, const TypePtr& b);

Check check_ctx_map(const ContextMap& f);
// substitution of f's terms into g's terms; requires target(f) = source(g)
ContextMap compose_ctx_maps(const ContextMap& g, const ContextMap& f);
ContextMap identity_ctx_map(const Telescope& g);
// target-name -> term view of a context map
Subst assignment_of(const ContextMap& f);
// same endpoints and componentwise def_eq
bool ctx_map_def_eq(const ContextMap& f, const ContextMap& g);

// --- concrete syntax --------------------------------------------------------
// type:      X | (Id <type> <term> <term>)
// term:      ident | (r <term>) | (J <type> ((x y p (Δ)) <type>)
//            ((z (names)) <term>) <term> <term> <term> (<term>*))
// telescope: ((x <type>) (y <type>) ...)
// Parsers reject shadowed names; `scope` seeds the names already in scope.

std::string render_term(const TermPtr& t, const std::string& base_name = "X");
std::string render_type(const TypePtr& t, const std::string& base_name = "X");
std::string render_telescope(const Telescope& g,
                             const std::string& base_name = "X");

TermPtr parse_term(const std::string& text,
                   const std::set<std::string>& scope = {},
                   const std::string& base_name = "X");
TypePtr parse_type(const std::string& text,
                   const std::set<std::string>& scope = {},
                   const std::string& base_name = "X");
Telescope parse_telescope(const std::string& text,
                          const std::string& base_name = "X");

struct Sexp;
TermPtr term_from_sexp(const Sexp& e, std::set<std::string> scope,
                       const std::string& base_name = "X");
TypePtr type_from_sexp(const Sexp& e, const std::set<std::string>& scope,
                       const std::string& base_name = "X");

}  // namespace omegatt

#endif
