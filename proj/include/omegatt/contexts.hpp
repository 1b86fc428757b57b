#ifndef OMEGATT_CONTEXTS_HPP
#define OMEGATT_CONTEXTS_HPP

#include <map>
#include <string>
#include <vector>

#include "omegatt/kernel.hpp"
#include "omegatt/pasting.hpp"

namespace omegatt {

// The context of a pasting diagram: one variable per cell, named x{k}_{j}
// for the j-th k-cell in canonical order, listed by dimension. A k-cell c
// with k >= 1 is typed Id(type of s(c), var(s(c)), var(t(c))); parallel
// cells receive alpha-identical types.
struct DiagramContext {
  PastingDiagram diagram;
  Telescope telescope;
  std::map<CellRef, std::string> var_of;
  std::map<std::string, CellRef> cell_of;
};

DiagramContext gamma(const PastingDiagram& pd);

std::string cell_var_name(int dim, int index);

// Projections to the boundary context, selecting variables through the
// source/target embeddings.
ContextMap src_map(const PastingDiagram& pd);
ContextMap tgt_map(const PastingDiagram& pd);

// The collapse maps used when a top cell c is removed: h plugs var(s(c))
// in for var(t(c)) and r(var(s(c))) for var(c); level i carries the
// analogous collapse whenever the i-fold boundary still contains c, and the
// identity otherwise. h_src[i]/h_tgt[i] sit under the i-th lower datum of a
// parallel pair; both satisfy the src/tgt commutation squares.
struct CollapseMaps {
  ContextMap h;
  std::vector<ContextMap> h_src, h_tgt;  // indexed by level i = 0 .. n-1
};
CollapseMaps collapse_map(const PastingDiagram& pd, const CellRef& c);

// The canonical map (x : X) -> G sending each variable of an iterated
// identity type of depth k to r^k(x). Checked on construction.
ContextMap initial_map(const Telescope& g);

}  // namespace omegatt

#endif
