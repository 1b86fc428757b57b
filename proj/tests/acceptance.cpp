// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full enumerated corpus (cell count <= 8, ambient <= 3).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "omegatt/exporting.hpp"
#include "omegatt/lawfile.hpp"
#include "omegatt/suite.hpp"
#include "oracles.hpp"

using namespace omegatt;

namespace {

int failures = 0;

void report(int number, const std::string& what, const Check& check,
            double ms, double budget_ms) {
  bool ok = check.ok && (budget_ms <= 0 || ms <= budget_ms);
  std::string budget =
      budget_ms > 0
          ? ", budget " + std::to_string(static_cast<int>(budget_ms)) + " ms"
          : "";
  std::printf("%s criterion %d: %s (%.0f ms%s)\n", ok ? "PASS" : "FAIL",
              number, what.c_str(), ms, budget.c_str());
  if (!check.ok) std::printf("  %s\n", check.message().c_str());
  if (check.ok && budget_ms > 0 && ms > budget_ms)
    std::printf("  exceeded runtime budget\n");
  if (!ok) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

Check run_all(const std::vector<SuiteProperty>& props,
              const std::vector<std::string>& names) {
  auto results = run_properties(props, 1);
  for (const auto& r : results) {
    bool wanted = names.empty();
    for (const auto& n : names) wanted = wanted || n == r.name;
    if (!wanted) continue;
    if (r.passed != r.instances)
      return Check::fail(r.name + ": " + std::to_string(r.passed) + "/" +
                         std::to_string(r.instances) + " (" +
                         r.failures.front() + ")");
  }
  return Check::pass();
}

std::vector<SuiteProperty> pick(const std::vector<SuiteProperty>& props,
                                const std::vector<std::string>& names) {
  std::vector<SuiteProperty> out;
  for (const auto& p : props)
    for (const auto& n : names)
      if (p.name == n) out.push_back(p);
  return out;
}

}  // namespace

int main() {
  SuiteConfig cfg;  // max_cells 8, max_dim 3

  // criterion 3 includes the synthesis sweep itself, so time corpus
  // construction together with the law checks
  Timer sweep_timer;
  auto corpus = build_corpus(cfg.max_cells, cfg.max_dim, 1);
  auto props = build_suite(cfg, corpus);
  Check c3 = run_all(pick(props, {"canonical-law-check"}), {});
  double sweep_ms = sweep_timer.ms();

  {
    Timer t;
    Check c = run_all(pick(props, {"intro-reproduction"}), {});
    report(1, "intro reproduction: distinct transitivity terms joined by a "
              "filler 2-cell",
           c, t.ms(), 1000.0);
  }
  {
    Timer t;
    Check c = run_all(pick(props, {"base-case-exactness"}), {});
    report(2, "base-case exactness: point fillers are reflexivity towers", c,
           t.ms(), 0);
  }
  report(3, "filler totality over the full corpus", c3, sweep_ms, 60000.0);
  {
    Timer t;
    Check c = run_all(pick(props, {"initiality-collapse", "initial-maps-check"}),
                      {});
    report(4, "initiality collapse and initial-map checking", c, t.ms(), 0);
  }
  {
    Timer t;
    Check c = run_all(pick(props, {"cell-globularity", "ctxmap-coglobularity"}),
                      {});
    report(5, "globularity and coglobularity", c, t.ms(), 0);
  }
  {
    Timer t;
    auto assoc = assoc_instances(cfg.max_cells);
    Check c = assoc.size() >= 10
                  ? run_all(pick(props, {"unit-axioms", "assoc-instances",
                                         "compose-type-preservation"}),
                            {})
                  : Check::fail("fewer than 10 associativity instances");
    report(6, "operad unit and associativity axioms at desk scale", c, t.ms(),
           0);
  }
  {
    Timer t;
    Check c = run_all(
        pick(props, {"subject-reduction", "confluence-two-strategies"}), {});
    report(7, "kernel health: subject reduction, confluence, fuel", c, t.ms(),
           0);
  }
  {
    Timer t;
    Check c = Check::pass();
    int instances = 0;
    for (const auto& pd : enumerate_diagrams(7, 2)) {
      if (tree_height(pd.tree) == 0) continue;
      for (const auto& labels : oracle::enumerate_labelings(pd, 5)) {
        int composite_cells = cell_count(substitute(pd, labels).composite);
        if (composite_cells > 6) continue;
        ++instances;
        Check one = oracle::check_substitute_against_gluing(pd, labels);
        if (!one) {
          c = std::move(one).under("over " + render_tree(pd));
          break;
        }
      }
      if (!c.ok) break;
    }
    if (c.ok && instances == 0)
      c = Check::fail("no substitution instances enumerated");
    report(8, "substitution agrees with the independent gluing oracle (" +
                  std::to_string(instances) + " instances)",
           c, t.ms(), 0);
  }
  {
    Timer t;
    // two full, fresh synthesis runs must be byte-identical
    auto render_corpus = [&] {
      std::string all;
      for (const auto& pd : enumerate_diagrams(cfg.max_cells, cfg.max_dim)) {
        CompositionLaw law = canonical_law(pd);
        all += render_law_text(law);
        all += export_law(law, "X", ExportFlavor::Native);
      }
      return all;
    };
    std::string first = render_corpus(), second = render_corpus();
    Check c = first == second
                  ? Check::pass()
                  : Check::fail("corpus runs differ byte-wise");
    report(9, "byte-identical law files and terms across runs", c, t.ms(), 0);
  }

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
