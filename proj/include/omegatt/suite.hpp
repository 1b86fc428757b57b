#ifndef OMEGATT_SUITE_HPP
#define OMEGATT_SUITE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "omegatt/operad.hpp"
#include "omegatt/synthesis.hpp"

namespace omegatt {

// Shared test corpus: every diagram within the size bounds, its canonical
// law, and the synthesized components with their contexts and types.
struct Corpus {
  int max_cells = 0, max_dim = 0;
  std::vector<PastingDiagram> diagrams;
  std::vector<CompositionLaw> laws;  // canonical_law per diagram, same order

  struct TermAt {
    std::string desc;
    Telescope context;
    TermPtr term;
    TypePtr type;
  };
  std::vector<TermAt> terms;  // every law component, contextualized
};

// jobs > 1 shards the per-diagram synthesis across OpenMP threads; results
// are merged by diagram index, so the output is identical to a serial run.
std::shared_ptr<const Corpus> build_corpus(int max_cells, int max_dim,
                                           int jobs = 1);

struct SuiteInstance {
  std::string desc;
  std::function<Check()> run;
};

struct SuiteProperty {
  std::string name;
  std::vector<SuiteInstance> instances;
};

struct PropertyResult {
  std::string name;
  int instances = 0;
  int passed = 0;
  double max_ms = 0.0;
  std::vector<std::string> failures;
};

struct SuiteConfig {
  int max_cells = 8;
  int max_dim = 3;
  int jobs = 1;
};

std::vector<SuiteProperty> build_suite(const SuiteConfig& cfg,
                                       std::shared_ptr<const Corpus> corpus);

// Serial when jobs == 1 (the reference path); OpenMP otherwise. Results are
// merged by instance index either way.
std::vector<PropertyResult> run_properties(
    const std::vector<SuiteProperty>& props, int jobs);

std::string format_table(const std::vector<PropertyResult>& results);
bool all_passed(const std::vector<PropertyResult>& results);

// Fixed two-level associativity instances with composite arity within
// max_cells; at least ten when max_cells >= 8.
struct AssocInstance {
  std::string desc;
  CompositionLaw outer;
  std::map<CellRef, CompositionLaw> labels1, labels2;
};
std::vector<AssocInstance> assoc_instances(int max_cells);

}  // namespace omegatt

#endif
