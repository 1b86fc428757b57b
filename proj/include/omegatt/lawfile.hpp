#ifndef OMEGATT_LAWFILE_HPP
#define OMEGATT_LAWFILE_HPP

#include <optional>
#include <string>

#include "omegatt/synthesis.hpp"

namespace omegatt {

// Law files:
//
//   (law
//     (arity "<tree>@n")
//     (sigma <term>*)
//     (tau <term>*)
//     (rho <term>))
//
// A parallel pair is the same file without the rho clause. Terms are scoped
// by the arity's context; shadowed names are rejected.
struct LawFile {
  PastingDiagram arity;
  std::vector<TermPtr> sigma, tau;
  std::optional<TermPtr> rho;

  bool is_pair() const { return !rho.has_value(); }
  CompositionLaw law() const;      // throws ParseError when rho is absent
  ParallelPair pair() const;       // drops rho when present
};

LawFile parse_law_text(const std::string& text,
                       const std::string& base_name = "X");
LawFile read_law_file(const std::string& path,
                      const std::string& base_name = "X");

std::string render_law_text(const CompositionLaw& law,
                            const std::string& base_name = "X");
std::string render_pair_text(const ParallelPair& pair,
                             const std::string& base_name = "X");

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace omegatt

#endif
