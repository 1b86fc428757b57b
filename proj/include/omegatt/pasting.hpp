#ifndef OMEGATT_PASTING_HPP
#define OMEGATT_PASTING_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omegatt/check.hpp"

namespace omegatt {

// Finite rooted plane tree. Children are ordered left to right.
struct TreeNode {
  std::vector<TreeNode> children;
  bool operator==(const TreeNode&) const = default;
};

int tree_height(const TreeNode& t);
int tree_node_count(const TreeNode& t);

// A pasting diagram: a plane tree plus an explicit ambient dimension.
// ambient_dim may exceed the tree height (degenerate diagrams, which behave
// as identity cells of the free strict omega-category).
struct PastingDiagram {
  TreeNode tree;
  int ambient_dim = 0;
  bool operator==(const PastingDiagram&) const = default;
};

// Throws DimTooSmall when ambient_dim < height(tree).
PastingDiagram make_diagram(TreeNode tree, int ambient_dim);

// A cell of the diagram's globular set: a node (by its child-index path from
// the root) together with a slot 0..arity(node). The cell's dimension is the
// node depth. For a node that is the i-th child (1-based) of its parent u,
// every cell at that node has source (u, i-1) and target (u, i); root cells
// have no boundary. Globularity holds by construction.
struct CellRef {
  std::vector<int> path;
  int slot = 0;

  int dim() const { return static_cast<int>(path.size()); }
  bool operator==(const CellRef&) const = default;
  // canonical order: dimension, then depth-first node position, then slot
  bool operator<(const CellRef& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (path != o.path) return path < o.path;
    return slot < o.slot;
  }
};

std::string render_cell(const CellRef& c);

const TreeNode* node_at(const TreeNode& tree, const std::vector<int>& path);
int arity_at(const PastingDiagram& pd, const std::vector<int>& path);

// Total mapping between the (finite) cell sets of two diagrams, shifting
// dimension by a declared constant (0 for every map this library builds).
struct CellMap {
  PastingDiagram from, to;
  int dim_shift = 0;
  std::map<CellRef, CellRef> map;

  CellRef apply(const CellRef& c) const;
  // totality, dimension shift, and commutation with source/target wherever
  // both sides are defined
  Check validate() const;
};

// Grammar: T ::= '[' T* ']', optional ambient suffix '@n'. Whitespace is
// ignored between tokens.
PastingDiagram parse_tree(const std::string& text);
// Canonical string; always carries the ambient suffix.
std::string render_tree(const PastingDiagram& pd);

int cell_count(const PastingDiagram& pd);
// k-cells in canonical order; empty for height < k <= ambient_dim.
std::vector<CellRef> cells(const PastingDiagram& pd, int k);
// all cells, ordered by dimension then canonically
std::vector<CellRef> all_cells(const PastingDiagram& pd);

CellRef source_cell(const PastingDiagram& pd, const CellRef& c);
CellRef target_cell(const PastingDiagram& pd, const CellRef& c);

// The common source/target: tree truncated to height <= ambient_dim - 1,
// ambient dimension decremented.
PastingDiagram boundary(const PastingDiagram& pd);
PastingDiagram boundary_iter(const PastingDiagram& pd, int times);

// Embeddings of the boundary's cells into pd. The source embedding keeps
// every (path, slot); the target embedding sends a top-dimensional (path, 0)
// to (path, arity in pd).
CellMap src_embed(const PastingDiagram& pd);
CellMap tgt_embed(const PastingDiagram& pd);

// Removes a top-dimensional leaf cell, identifying its source and target.
// Returns the smaller diagram and the map taking each of its cells to the
// corresponding cell of pd. Cell count drops by exactly 2.
std::pair<PastingDiagram, CellMap> remove_cell(const PastingDiagram& pd,
                                               const CellRef& c);

// Commutation with boundaries for a removal correspondence: strict except
// across the seam, where target_cell(pd, removed) counts as
// source_cell(pd, removed).
Check validate_removal_map(const CellMap& m, const CellRef& removed);

// Monadic substitution: glue one labelling diagram per cell of pd. Labels
// must satisfy ambient(labels[c]) == dim(c) and the boundary compatibility
// boundary(labels[c]) == labels[source(c)] == labels[target(c)].
struct SubstituteResult {
  PastingDiagram composite;
  std::map<CellRef, CellMap> cell_maps;  // cells of labels[c] -> composite
};
SubstituteResult substitute(const PastingDiagram& pd,
                            const std::map<CellRef, PastingDiagram>& labels);

// The basic k-cell: linear tree of height k, ambient k.
PastingDiagram basic_cell(int k);
// Identity labelling (each cell labelled by the basic cell of its dimension).
std::map<CellRef, PastingDiagram> identity_labels(const PastingDiagram& pd);

// Every diagram with cell count <= max_cells and ambient_dim <= max_dim,
// each exactly once, in a deterministic order.
std::vector<PastingDiagram> enumerate_diagrams(int max_cells, int max_dim);

}  // namespace omegatt

#endif
