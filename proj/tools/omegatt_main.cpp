#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omegatt/errors.hpp"
#include "omegatt/exporting.hpp"
#include "omegatt/lawfile.hpp"
#include "omegatt/operad.hpp"
#include "omegatt/sexpr.hpp"
#include "omegatt/suite.hpp"

using namespace omegatt;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int cmd_ctx(const std::string& tree) {
  DiagramContext ctx = gamma(parse_tree(tree));
  for (const auto& e : ctx.telescope.entries)
    std::cout << e.name << " : " << render_type(e.type) << "\n";
  return 0;
}

int cmd_law(const std::string& tree, const std::string& out_path) {
  CompositionLaw law = canonical_law(parse_tree(tree));
  emit(render_law_text(law), out_path);
  return 0;
}

int cmd_fill(const std::string& pair_path, const std::string& out_path,
             const std::string& base) {
  LawFile f = read_law_file(pair_path, base);
  TermPtr rho = fill(f.pair());
  emit(render_term(rho, base) + "\n", out_path);
  return 0;
}

CellRef resolve_cellref(const PastingDiagram& pd, const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("cell reference must be k:j, got " + text);
    return std::stoi(s);
  };
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("cell reference must be k:j, got " + text);
  int k = number(text.substr(0, colon));
  int j = number(text.substr(colon + 1));
  auto cs = cells(pd, k);
  if (j >= static_cast<int>(cs.size()))
    throw DimOutOfRange("no " + std::to_string(k) + "-cell with index " +
                        std::to_string(j));
  return cs[j];
}

int cmd_compose(const std::string& outer_path,
                const std::vector<std::string>& bindings,
                const std::string& out_path, const std::string& base) {
  LawFile outer = read_law_file(outer_path, base);
  LabelledLawDiagram d;
  d.outer = outer.law();
  d.labels = identity_law_labels(d.outer.arity);
  for (const std::string& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos)
      throw ParseError("--label expects k:j=FILE, got " + b);
    CellRef c = resolve_cellref(d.outer.arity, b.substr(0, eq));
    d.labels[c] = read_law_file(b.substr(eq + 1), base).law();
  }
  CompositionLaw composed = compose_laws(d);
  if (Check c = check_law(composed); !c) {
    std::cerr << "composed law fails checking:\n" << c.message() << "\n";
    return 1;
  }
  emit(render_law_text(composed, base), out_path);
  return 0;
}

ContextMap parse_ctx_map_file(const std::string& path, const Telescope& target) {
  Sexp e = parse_sexp(read_text_file(path));
  if (!e.is_list() || e.items.size() != 3 || !e.items[0].is_atom() ||
      e.items[0].text != "ctxmap")
    throw ParseError("expected (ctxmap (source <telescope>) (terms <term>*))");
  const Sexp& src = e.items[1];
  const Sexp& terms = e.items[2];
  if (!src.is_list() || src.items.size() != 2 || !src.items[0].is_atom() ||
      src.items[0].text != "source" || !terms.is_list() ||
      terms.items.empty() || !terms.items[0].is_atom() ||
      terms.items[0].text != "terms")
    throw ParseError("expected (ctxmap (source <telescope>) (terms <term>*))");
  ContextMap f;
  f.source = parse_telescope(src.items[1].render());
  f.target = target;
  std::set<std::string> scope;
  for (const auto& entry : f.source.entries) scope.insert(entry.name);
  for (size_t i = 1; i < terms.items.size(); ++i)
    f.terms.push_back(term_from_sexp(terms.items[i], scope));
  return f;
}

int cmd_apply(const std::string& law_path, bool initial,
              const std::string& map_path, bool do_normalize,
              const std::string& base) {
  CompositionLaw law = read_law_file(law_path, base).law();
  ContextMap f = initial ? initial_map(gamma(law.arity).telescope)
                         : parse_ctx_map_file(map_path,
                                              gamma(law.arity).telescope);
  TermPtr t = apply_law(law, f);
  if (do_normalize) t = normalize(t);
  std::cout << render_term(t, base) << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& base) {
  LawFile f = read_law_file(path, base);
  Check c = f.is_pair() ? check_pair(f.pair()) : check_law(f.law());
  if (!c) {
    std::cerr << c.message() << "\n";
    return 1;
  }
  std::cout << (f.is_pair() ? "ok (parallel pair)" : "ok (law)") << "\n";
  return 0;
}

int cmd_normalize(const std::string& term_text, const std::string& ctx_text,
                  const std::string& type_text) {
  Telescope g;
  std::set<std::string> scope;
  if (!ctx_text.empty()) {
    g = parse_telescope(ctx_text);
    if (Check c = wf_telescope(g); !c) {
      std::cerr << c.message() << "\n";
      return 1;
    }
    for (const auto& e : g.entries) scope.insert(e.name);
  }
  TermPtr t = parse_term(term_text, scope);
  if (!type_text.empty()) {
    TypePtr ty = parse_type(type_text, scope);
    if (Check c = check_term(g, t, ty); !c) {
      std::cerr << c.message() << "\n";
      return 1;
    }
  }
  std::cout << render_term(normalize(t)) << "\n";
  return 0;
}

int cmd_enumerate(int max_cells, int max_dim, bool suite, int jobs) {
  if (!suite) {
    for (const auto& pd : enumerate_diagrams(max_cells, max_dim))
      std::cout << render_tree(pd) << "\n";
    return 0;
  }
  auto corpus = build_corpus(max_cells, max_dim, jobs);
  SuiteConfig cfg{max_cells, max_dim, jobs};
  auto results = run_properties(build_suite(cfg, corpus), jobs);
  std::cout << format_table(results);
  if (!all_passed(results)) {
    for (const auto& r : results)
      for (const auto& f : r.failures)
        std::cerr << r.name << " failed: " << f << "\n";
    return 1;
  }
  return 0;
}

int cmd_export(const std::string& law_path, const std::string& name,
               const std::string& flavor, const std::string& out_path,
               const std::string& base) {
  CompositionLaw law = read_law_file(law_path, base).law();
  ExportFlavor fl;
  if (flavor == "native")
    fl = ExportFlavor::Native;
  else if (flavor == "surface")
    fl = ExportFlavor::Surface;
  else
    throw ParseError("unknown export flavor " + flavor);
  emit(export_law(law, name, fl), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pasting-diagram contexts, filler synthesis and composition "
               "laws over the identity-type fragment"};
  app.require_subcommand(1);

  std::string tree, out_path, pair_path, law_path, map_path, term_text,
      ctx_text, type_text, name, flavor = "native", base = "X";
  std::vector<std::string> bindings;
  bool initial = false, do_normalize = false, suite = false;
  int max_cells = 8, max_dim = 3, jobs = 1;
  auto base_opt = [&base](CLI::App* cmd) {
    cmd->add_option("--base", base,
                    "identifier naming the base type in law files");
  };

  auto* ctx = app.add_subcommand("ctx", "print the context of a diagram");
  ctx->add_option("tree", tree, "bracket tree, optional @n")->required();

  auto* law = app.add_subcommand("law", "write the canonical law");
  law->add_option("tree", tree)->required();
  law->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* fill_cmd = app.add_subcommand("fill", "fill a parallel pair");
  fill_cmd->add_option("--pair", pair_path, "pair file")->required();
  fill_cmd->add_option("-o,--out", out_path);
  base_opt(fill_cmd);

  auto* compose = app.add_subcommand("compose", "compose laws over a diagram");
  compose->add_option("outer", law_path, "outer law file")->required();
  compose->add_option("--label", bindings,
                      "k:j=FILE label binding (defaults: identity laws)");
  compose->add_option("-o,--out", out_path);
  base_opt(compose);

  auto* apply = app.add_subcommand("apply", "apply a law along a context map");
  apply->add_option("law", law_path)->required();
  apply->add_flag("--initial", initial, "use the initial map from (x : X)");
  apply->add_option("--map", map_path, "context map file");
  apply->add_flag("--normalize", do_normalize);
  base_opt(apply);

  auto* check = app.add_subcommand("check", "check a law or pair file");
  check->add_option("file", law_path)->required();
  base_opt(check);

  auto* norm = app.add_subcommand("normalize", "normalize a term");
  norm->add_option("-e,--expr", term_text, "term s-expression")->required();
  norm->add_option("--ctx", ctx_text, "telescope s-expression");
  norm->add_option("--type", type_text, "check at this type first");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate diagrams");
  enumerate->add_option("--max-cells", max_cells);
  enumerate->add_option("--max-dim", max_dim);
  enumerate->add_flag("--suite", suite, "run the property suites");
  enumerate->add_option("--jobs", jobs, "shard suite instances (OpenMP)");

  auto* exp = app.add_subcommand("export", "instantiate the base type");
  exp->add_option("law", law_path)->required();
  exp->add_option("--name", name, "type name")->required();
  exp->add_option("--flavor", flavor, "native | surface");
  exp->add_option("-o,--out", out_path);
  base_opt(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ctx) return cmd_ctx(tree);
    if (*law) return cmd_law(tree, out_path);
    if (*fill_cmd) return cmd_fill(pair_path, out_path, base);
    if (*compose) return cmd_compose(law_path, bindings, out_path, base);
    if (*apply) {
      if (initial == !map_path.empty()) {
        std::cerr << "apply needs exactly one of --initial or --map\n";
        return 2;
      }
      return cmd_apply(law_path, initial, map_path, do_normalize, base);
    }
    if (*check) return cmd_check(law_path, base);
    if (*norm) return cmd_normalize(term_text, ctx_text, type_text);
    if (*enumerate) return cmd_enumerate(max_cells, max_dim, suite, jobs);
    if (*exp) return cmd_export(law_path, name, flavor, out_path, base);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
