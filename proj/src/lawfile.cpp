#include "omegatt/lawfile.hpp"

#include <fstream>
#include <sstream>

#include "omegatt/errors.hpp"
#include "omegatt/sexpr.hpp"

namespace omegatt {

CompositionLaw LawFile::law() const {
  if (!rho) throw ParseError("law file has no rho clause");
  return CompositionLaw{arity, sigma, tau, *rho};
}

ParallelPair LawFile::pair() const { return ParallelPair{arity, sigma, tau}; }

LawFile parse_law_text(const std::string& text, const std::string& base_name) {
  Sexp e = parse_sexp(text);
  if (!e.is_list() || e.items.empty() || !e.items[0].is_atom() ||
      e.items[0].text != "law")
    throw ParseError("expected a (law ...) form");

  LawFile out;
  bool have_arity = false, have_sigma = false, have_tau = false;
  for (size_t i = 1; i < e.items.size(); ++i) {
    const Sexp& clause = e.items[i];
    if (!clause.is_list() || clause.items.empty() || !clause.items[0].is_atom())
      throw ParseError("expected a law clause at `" + clause.render() + "`");
    const std::string& head = clause.items[0].text;
    if (head == "arity") {
      if (clause.items.size() != 2 || !clause.items[1].is_str())
        throw ParseError("(arity ...) takes one quoted tree");
      out.arity = parse_tree(clause.items[1].text);
      have_arity = true;
    } else if (head == "sigma" || head == "tau") {
      if (!have_arity) throw ParseError("(arity ...) must come first");
      std::set<std::string> scope;
      for (const auto& entry : gamma(out.arity).telescope.entries)
        scope.insert(entry.name);
      std::vector<TermPtr> terms;
      for (size_t j = 1; j < clause.items.size(); ++j)
        terms.push_back(term_from_sexp(clause.items[j], scope, base_name));
      (head == "sigma" ? out.sigma : out.tau) = std::move(terms);
      (head == "sigma" ? have_sigma : have_tau) = true;
    } else if (head == "rho") {
      if (!have_arity) throw ParseError("(arity ...) must come first");
      if (clause.items.size() != 2) throw ParseError("(rho ...) takes one term");
      std::set<std::string> scope;
      for (const auto& entry : gamma(out.arity).telescope.entries)
        scope.insert(entry.name);
      out.rho = term_from_sexp(clause.items[1], scope, base_name);
    } else {
      throw ParseError("unknown law clause " + head);
    }
  }
  if (!have_arity || !have_sigma || !have_tau)
    throw ParseError("law file needs arity, sigma and tau clauses");
  int n = out.arity.ambient_dim;
  if (static_cast<int>(out.sigma.size()) != n ||
      static_cast<int>(out.tau.size()) != n)
    throw ParseError("law over ambient dimension " + std::to_string(n) +
                     " needs " + std::to_string(n) + " sigma/tau components");
  return out;
}

LawFile read_law_file(const std::string& path, const std::string& base_name) {
  return parse_law_text(read_text_file(path), base_name);
}

namespace {

void render_clause(std::ostringstream& os, const std::string& head,
                   const std::vector<TermPtr>& terms,
                   const std::string& base_name) {
  if (terms.empty()) {
    os << "  (" << head << ")\n";
    return;
  }
  os << "  (" << head;
  for (const auto& t : terms) os << "\n    " << render_term(t, base_name);
  os << ")\n";
}

std::string render_components(const PastingDiagram& arity,
                              const std::vector<TermPtr>& sigma,
                              const std::vector<TermPtr>& tau,
                              const TermPtr& rho,
                              const std::string& base_name) {
  std::ostringstream os;
  os << "(law\n";
  os << "  (arity \"" << render_tree(arity) << "\")\n";
  render_clause(os, "sigma", sigma, base_name);
  render_clause(os, "tau", tau, base_name);
  if (rho) render_clause(os, "rho", {rho}, base_name);
  std::string out = os.str();
  // close the law form
  out.back() = ')';
  out += "\n";
  return out;
}

}  // namespace

std::string render_law_text(const CompositionLaw& law,
                            const std::string& base_name) {
  return render_components(law.arity, law.sigma, law.tau, law.rho, base_name);
}

std::string render_pair_text(const ParallelPair& pair,
                             const std::string& base_name) {
  return render_components(pair.arity, pair.sigma, pair.tau, nullptr,
                           base_name);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw error("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace omegatt
