#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "omegatt/errors.hpp"

namespace omegatt::oracle {

namespace {

bool is_single_tree(const std::string& s) {
  if (s.empty() || s.front() != '[' || s.back() != ']') return false;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    depth += (s[i] == '[') ? 1 : -1;
    if (depth < 0) return false;
    if (depth == 0 && i + 1 != s.size()) return false;
  }
  return depth == 0;
}

int nesting_height(const std::string& s) {
  int depth = 0, max_depth = 0;
  for (char c : s) {
    depth += (c == '[') ? 1 : -1;
    max_depth = std::max(max_depth, depth);
  }
  return max_depth - 1;  // root sits at depth 1
}

void bracket_strings(int len, std::string& cur, std::set<std::string>& out) {
  if (static_cast<int>(cur.size()) == len) {
    if (is_single_tree(cur)) out.insert(cur);
    return;
  }
  cur.push_back('[');
  bracket_strings(len, cur, out);
  cur.back() = ']';
  bracket_strings(len, cur, out);
  cur.pop_back();
}

}  // namespace

std::vector<std::string> brute_force_diagrams(int max_cells, int max_dim) {
  // a tree with k nodes has 2k-1 cells and renders as 2k brackets
  std::set<std::string> trees;
  for (int nodes = 1; 2 * nodes - 1 <= max_cells; ++nodes) {
    std::string cur;
    bracket_strings(2 * nodes, cur, trees);
  }
  std::vector<std::string> out;
  for (const auto& t : trees) {
    int h = nesting_height(t);
    std::string with_commas;
    for (size_t i = 0; i < t.size(); ++i) {
      with_commas += t[i];
      if (t[i] == ']' && i + 1 < t.size() && t[i + 1] == '[')
        with_commas += ',';
    }
    for (int ambient = h; ambient <= max_dim; ++ambient)
      out.push_back(with_commas + "@" + std::to_string(ambient));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlatGlob flatten(const PastingDiagram& pd, std::map<CellRef, int>* index_out) {
  FlatGlob g;
  std::map<CellRef, int> index;
  auto cs = all_cells(pd);
  for (size_t i = 0; i < cs.size(); ++i) index[cs[i]] = static_cast<int>(i);
  for (const CellRef& c : cs) {
    g.dim.push_back(c.dim());
    g.src.push_back(c.dim() ? index.at(source_cell(pd, c)) : -1);
    g.tgt.push_back(c.dim() ? index.at(target_cell(pd, c)) : -1);
  }
  if (index_out) *index_out = std::move(index);
  return g;
}

namespace {

// embeddings recomputed from the raw tree, separate from the library's
CellRef oracle_src_embed(const CellRef& e) { return e; }

int oracle_arity(const TreeNode& t, const std::vector<int>& path) {
  const TreeNode* n = &t;
  for (int i : path) n = &n->children[i];
  return static_cast<int>(n->children.size());
}

CellRef oracle_tgt_embed(const PastingDiagram& big, const CellRef& e) {
  if (e.dim() != big.ambient_dim - 1) return e;
  CellRef out = e;
  out.slot = e.slot + oracle_arity(big.tree, e.path);
  return out;
}

}  // namespace

Check check_substitute_against_gluing(
    const PastingDiagram& pd,
    const std::map<CellRef, PastingDiagram>& labels) {
  auto pd_cells = all_cells(pd);

  // disjoint union
  std::map<CellRef, int> offset;
  std::map<CellRef, std::map<CellRef, int>> local;
  std::vector<int> dim, src, tgt;
  std::vector<std::pair<CellRef, CellRef>> owner;  // gid -> (pd cell, label cell)
  for (const CellRef& c : pd_cells) {
    const PastingDiagram& L = labels.at(c);
    std::map<CellRef, int> idx;
    FlatGlob f = flatten(L, &idx);
    int base = static_cast<int>(dim.size());
    offset[c] = base;
    for (const CellRef& e : all_cells(L)) owner.emplace_back(c, e);
    for (size_t i = 0; i < f.dim.size(); ++i) {
      dim.push_back(f.dim[i]);
      src.push_back(f.src[i] < 0 ? -1 : base + f.src[i]);
      tgt.push_back(f.tgt[i] < 0 ? -1 : base + f.tgt[i]);
    }
    local[c] = std::move(idx);
  }
  int total = static_cast<int>(dim.size());

  // identification edges, then connected components by BFS
  std::vector<std::vector<int>> adj(total);
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (const CellRef& c : pd_cells) {
    if (c.dim() == 0) continue;
    const PastingDiagram& L = labels.at(c);
    CellRef sc = source_cell(pd, c), tc = target_cell(pd, c);
    for (const CellRef& e : all_cells(boundary(L))) {
      connect(offset.at(sc) + local.at(sc).at(e),
              offset.at(c) + local.at(c).at(oracle_src_embed(e)));
      connect(offset.at(tc) + local.at(tc).at(e),
              offset.at(c) + local.at(c).at(oracle_tgt_embed(L, e)));
    }
  }
  std::vector<int> comp(total, -1);
  int ncomp = 0;
  for (int start = 0; start < total; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> queue{start};
    comp[start] = ncomp;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = ncomp;
          queue.push_back(y);
        }
    }
    ++ncomp;
  }

  // component dimension and boundaries must be unambiguous
  std::vector<int> cdim(ncomp, -1), csrc(ncomp, -2), ctgt(ncomp, -2);
  for (int x = 0; x < total; ++x) {
    int k = comp[x];
    if (cdim[k] == -1)
      cdim[k] = dim[x];
    else if (cdim[k] != dim[x])
      return Check::fail("glued class mixes dimensions");
    int sx = src[x] < 0 ? -1 : comp[src[x]];
    int tx = tgt[x] < 0 ? -1 : comp[tgt[x]];
    if (csrc[k] == -2) {
      csrc[k] = sx;
      ctgt[k] = tx;
    } else if (csrc[k] != sx || ctgt[k] != tx) {
      return Check::fail("glued class has ambiguous boundary");
    }
  }

  // compare with the library result
  SubstituteResult result = substitute(pd, labels);
  std::map<CellRef, int> comp_index;
  FlatGlob cf = flatten(result.composite, &comp_index);
  if (static_cast<int>(comp_index.size()) != ncomp)
    return Check::fail("composite has " + std::to_string(comp_index.size()) +
                       " cells, gluing has " + std::to_string(ncomp) +
                       " classes");

  std::vector<int> iso(ncomp, -1);  // class -> composite cell index
  for (int x = 0; x < total; ++x) {
    const auto& [c, e] = owner[x];
    CellRef image = result.cell_maps.at(c).apply(e);
    int idx = comp_index.at(image);
    if (iso[comp[x]] == -1)
      iso[comp[x]] = idx;
    else if (iso[comp[x]] != idx)
      return Check::fail("cell maps are not constant on glued classes");
  }
  std::set<int> hit;
  for (int k = 0; k < ncomp; ++k) {
    if (iso[k] < 0) return Check::fail("glued class missed by the cell maps");
    if (!hit.insert(iso[k]).second)
      return Check::fail("cell maps identify distinct glued classes");
    if (cf.dim[iso[k]] != cdim[k])
      return Check::fail("isomorphism does not preserve dimension");
    int want_src = csrc[k] < 0 ? -1 : iso[csrc[k]];
    int want_tgt = ctgt[k] < 0 ? -1 : iso[ctgt[k]];
    if (cf.src[iso[k]] != want_src || cf.tgt[iso[k]] != want_tgt)
      return Check::fail("isomorphism does not preserve boundaries");
  }
  return Check::pass();
}

std::vector<std::map<CellRef, PastingDiagram>> enumerate_labelings(
    const PastingDiagram& pd, int label_cells) {
  auto cs = all_cells(pd);
  int max_dim = tree_height(pd.tree);
  std::vector<PastingDiagram> universe = enumerate_diagrams(label_cells, max_dim);

  std::vector<std::map<CellRef, PastingDiagram>> out;
  std::map<CellRef, PastingDiagram> current;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == cs.size()) {
      out.push_back(current);
      return;
    }
    const CellRef& c = cs[i];
    if (c.dim() == 0) {
      current[c] = PastingDiagram{TreeNode{}, 0};
      self(self, i + 1);
      current.erase(c);
      return;
    }
    const PastingDiagram& at_src = current.at(source_cell(pd, c));
    const PastingDiagram& at_tgt = current.at(target_cell(pd, c));
    for (const PastingDiagram& d : universe) {
      if (d.ambient_dim != c.dim()) continue;
      PastingDiagram b = boundary(d);
      if (!(b == at_src) || !(b == at_tgt)) continue;
      current[c] = d;
      self(self, i + 1);
      current.erase(c);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace omegatt::oracle
