#include "omegatt/pasting.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "omegatt/errors.hpp"

namespace omegatt {

int tree_height(const TreeNode& t) {
  int h = 0;
  for (const auto& c : t.children) h = std::max(h, 1 + tree_height(c));
  return h;
}

int tree_node_count(const TreeNode& t) {
  int n = 1;
  for (const auto& c : t.children) n += tree_node_count(c);
  return n;
}

PastingDiagram make_diagram(TreeNode tree, int ambient_dim) {
  int h = tree_height(tree);
  if (ambient_dim < h)
    throw DimTooSmall("ambient dimension " + std::to_string(ambient_dim) +
                      " below tree height " + std::to_string(h));
  return PastingDiagram{std::move(tree), ambient_dim};
}

std::string render_cell(const CellRef& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.path.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.path[i]);
  }
  return out + "):" + std::to_string(c.slot);
}

const TreeNode* node_at(const TreeNode& tree, const std::vector<int>& path) {
  const TreeNode* n = &tree;
  for (int i : path) {
    if (i < 0 || i >= static_cast<int>(n->children.size())) return nullptr;
    n = &n->children[i];
  }
  return n;
}

int arity_at(const PastingDiagram& pd, const std::vector<int>& path) {
  const TreeNode* n = node_at(pd.tree, path);
  if (!n) throw DimOutOfRange("no node at given path");
  return static_cast<int>(n->children.size());
}

CellRef CellMap::apply(const CellRef& c) const {
  auto it = map.find(c);
  if (it == map.end()) throw DimOutOfRange("cell not in map: " + render_cell(c));
  return it->second;
}

Check CellMap::validate() const {
  for (const CellRef& c : all_cells(from)) {
    auto it = map.find(c);
    if (it == map.end())
      return Check::fail("map not total: missing " + render_cell(c));
    const CellRef& img = it->second;
    if (img.dim() != c.dim() + dim_shift)
      return Check::fail("dimension shift violated at " + render_cell(c));
    if (!node_at(to.tree, img.path) ||
        img.slot < 0 || img.slot > arity_at(to, img.path))
      return Check::fail("image cell not in target: " + render_cell(img));
    if (c.dim() >= 1 && img.dim() >= 1) {
      if (!(apply(source_cell(from, c)) == source_cell(to, img)))
        return Check::fail("source square fails at " + render_cell(c));
      if (!(apply(target_cell(from, c)) == target_cell(to, img)))
        return Check::fail("target square fails at " + render_cell(c));
    }
  }
  return Check::pass();
}

namespace {

TreeNode parse_node(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos >= s.size() || s[pos] != '[') throw MalformedTree("expected '['");
  ++pos;
  TreeNode n;
  for (;;) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) throw MalformedTree("unbalanced brackets");
    if (s[pos] == ']') {
      ++pos;
      return n;
    }
    if (s[pos] == ',') {  // tolerated separator
      ++pos;
      continue;
    }
    n.children.push_back(parse_node(s, pos));
  }
}

}  // namespace

PastingDiagram parse_tree(const std::string& text) {
  size_t pos = 0;
  TreeNode root = parse_node(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  int ambient = tree_height(root);
  if (pos < text.size()) {
    if (text[pos] != '@') throw MalformedTree("trailing input after tree");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw MalformedTree("expected number after '@'");
    int n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      n = 10 * n + (text[pos++] - '0');
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) throw MalformedTree("trailing input after dimension");
    ambient = n;
  }
  return make_diagram(std::move(root), ambient);
}

namespace {

void render_node(const TreeNode& n, std::string& out) {
  out += "[";
  for (size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ",";
    render_node(n.children[i], out);
  }
  out += "]";
}

}  // namespace

std::string render_tree(const PastingDiagram& pd) {
  std::string out;
  render_node(pd.tree, out);
  out += "@" + std::to_string(pd.ambient_dim);
  return out;
}

namespace {

void collect_cells(const TreeNode& n, std::vector<int>& path, int k,
                   std::vector<CellRef>& out) {
  if (static_cast<int>(path.size()) == k) {
    for (int s = 0; s <= static_cast<int>(n.children.size()); ++s)
      out.push_back(CellRef{path, s});
    return;
  }
  for (size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_cells(n.children[i], path, k, out);
    path.pop_back();
  }
}

}  // namespace

int cell_count(const PastingDiagram& pd) {
  // each node contributes arity + 1 cells
  return 2 * tree_node_count(pd.tree) - 1;
}

std::vector<CellRef> cells(const PastingDiagram& pd, int k) {
  if (k < 0 || k > pd.ambient_dim)
    throw DimOutOfRange("cell dimension " + std::to_string(k) +
                        " exceeds ambient " + std::to_string(pd.ambient_dim));
  std::vector<CellRef> out;
  std::vector<int> path;
  collect_cells(pd.tree, path, k, out);
  return out;
}

std::vector<CellRef> all_cells(const PastingDiagram& pd) {
  std::vector<CellRef> out;
  int h = tree_height(pd.tree);
  for (int k = 0; k <= h; ++k) {
    auto cs = cells(pd, k);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

CellRef source_cell(const PastingDiagram& pd, const CellRef& c) {
  if (c.dim() == 0) throw NoBoundary("0-cells have no source");
  if (!node_at(pd.tree, c.path)) throw DimOutOfRange("cell not in diagram");
  CellRef out;
  out.path.assign(c.path.begin(), c.path.end() - 1);
  out.slot = c.path.back();
  return out;
}

CellRef target_cell(const PastingDiagram& pd, const CellRef& c) {
  if (c.dim() == 0) throw NoBoundary("0-cells have no target");
  if (!node_at(pd.tree, c.path)) throw DimOutOfRange("cell not in diagram");
  CellRef out;
  out.path.assign(c.path.begin(), c.path.end() - 1);
  out.slot = c.path.back() + 1;
  return out;
}

namespace {

TreeNode truncate_tree(const TreeNode& t, int max_height) {
  TreeNode out;
  if (max_height == 0) return out;
  for (const auto& c : t.children)
    out.children.push_back(truncate_tree(c, max_height - 1));
  return out;
}

}  // namespace

PastingDiagram boundary(const PastingDiagram& pd) {
  if (pd.ambient_dim == 0) throw DimOutOfRange("boundary of a 0-diagram");
  return PastingDiagram{truncate_tree(pd.tree, pd.ambient_dim - 1),
                        pd.ambient_dim - 1};
}

PastingDiagram boundary_iter(const PastingDiagram& pd, int times) {
  PastingDiagram d = pd;
  for (int i = 0; i < times; ++i) d = boundary(d);
  return d;
}

namespace {

CellMap embed(const PastingDiagram& pd, bool target_side) {
  PastingDiagram b = boundary(pd);
  CellMap m;
  m.from = b;
  m.to = pd;
  for (const CellRef& c : all_cells(b)) {
    CellRef img = c;
    if (target_side && c.dim() == pd.ambient_dim - 1)
      img.slot = c.slot + arity_at(pd, c.path);
    m.map[c] = img;
  }
  return m;
}

}  // namespace

CellMap src_embed(const PastingDiagram& pd) { return embed(pd, false); }
CellMap tgt_embed(const PastingDiagram& pd) { return embed(pd, true); }

std::pair<PastingDiagram, CellMap> remove_cell(const PastingDiagram& pd,
                                               const CellRef& c) {
  int h = tree_height(pd.tree);
  if (h == 0) throw NoCells("cannot remove a cell from a point diagram");
  if (c.dim() != h)
    throw NotTopCell("cell " + render_cell(c) + " is not top-dimensional");
  const TreeNode* n = node_at(pd.tree, c.path);
  if (!n || !n->children.empty() || c.slot != 0)
    throw NotTopCell("cell " + render_cell(c) + " is not a leaf cell");

  // delete the leaf
  TreeNode tree = pd.tree;
  TreeNode* parent = &tree;
  for (size_t i = 0; i + 1 < c.path.size(); ++i)
    parent = &parent->children[c.path[i]];
  int removed_index = c.path.back();
  parent->children.erase(parent->children.begin() + removed_index);
  PastingDiagram out{std::move(tree), pd.ambient_dim};

  std::vector<int> parent_path(c.path.begin(), c.path.end() - 1);
  CellMap m;
  m.from = out;
  m.to = pd;
  for (const CellRef& e : all_cells(out)) {
    CellRef img = e;
    // child indices at the removed node's parent shift up past the gap
    if (static_cast<int>(e.path.size()) > static_cast<int>(parent_path.size()) &&
        std::equal(parent_path.begin(), parent_path.end(), e.path.begin())) {
      int j = e.path[parent_path.size()];
      if (j >= removed_index) img.path[parent_path.size()] = j + 1;
    }
    // slots at the parent skip the collapsed target slot
    if (e.path == parent_path && e.slot > removed_index) img.slot = e.slot + 1;
    m.map[e] = img;
  }
  return {out, m};
}

Check validate_removal_map(const CellMap& m, const CellRef& removed) {
  CellRef s = source_cell(m.to, removed);
  CellRef t = target_cell(m.to, removed);
  auto collapse = [&](CellRef c) { return c == t ? s : c; };
  for (const CellRef& c : all_cells(m.from)) {
    auto it = m.map.find(c);
    if (it == m.map.end())
      return Check::fail("map not total: missing " + render_cell(c));
    if (it->second.dim() != c.dim())
      return Check::fail("dimension changes at " + render_cell(c));
    if (c.dim() == 0) continue;
    if (!(m.apply(source_cell(m.from, c)) ==
          collapse(source_cell(m.to, it->second))))
      return Check::fail("source seam fails at " + render_cell(c));
    if (!(m.apply(target_cell(m.from, c)) ==
          collapse(target_cell(m.to, it->second))))
      return Check::fail("target seam fails at " + render_cell(c));
  }
  return Check::pass();
}

PastingDiagram basic_cell(int k) {
  TreeNode t;
  for (int i = 0; i < k; ++i) {
    TreeNode parent;
    parent.children.push_back(std::move(t));
    t = std::move(parent);
  }
  return PastingDiagram{std::move(t), k};
}

std::map<CellRef, PastingDiagram> identity_labels(const PastingDiagram& pd) {
  std::map<CellRef, PastingDiagram> out;
  for (const CellRef& c : all_cells(pd)) out[c] = basic_cell(c.dim());
  return out;
}

// ---------------------------------------------------------------------------
// substitute: glue the labelling diagrams into one globular set, then read
// the result back as a tree (0-cells chained by 1-cell adjacency, recursing
// on the homs between consecutive ones).

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Glued {
  // per class: dimension and boundary classes (-1 for dimension 0)
  std::vector<int> dim, src, tgt;
};

struct Recognizer {
  const Glued& g;
  std::map<int, CellRef> out;  // class id -> cell of the recognized tree

  TreeNode rec(const std::vector<int>& ids, int d, std::vector<int>& path) {
    std::vector<int> objects, higher;
    for (int x : ids) (g.dim[x] == d ? objects : higher).push_back(x);
    if (objects.empty())
      throw ArityMismatch("glued set has no cells at dimension " +
                          std::to_string(d));

    // chain the objects via the (d+1)-cells
    std::map<int, int> succ, indeg;
    for (int o : objects) indeg[o] = 0;
    for (int x : higher) {
      if (g.dim[x] != d + 1) continue;
      int s = g.src[x], t = g.tgt[x];
      if (!indeg.count(s) || !indeg.count(t))
        throw ArityMismatch("boundary escapes its column during recognition");
      auto it = succ.find(s);
      if (it == succ.end()) {
        succ[s] = t;
        indeg[t]++;
      } else if (it->second != t) {
        throw ArityMismatch("non-linear adjacency among parallel cells");
      }
    }
    int start = -1;
    for (int o : objects)
      if (indeg[o] == 0) {
        if (start != -1) throw ArityMismatch("disconnected glued set");
        start = o;
      }
    if (start == -1) throw ArityMismatch("cyclic adjacency in glued set");
    std::vector<int> chain{start};
    while (succ.count(chain.back())) chain.push_back(succ.at(chain.back()));
    if (chain.size() != objects.size())
      throw ArityMismatch("disconnected glued set");

    for (size_t j = 0; j < chain.size(); ++j)
      out[chain[j]] = CellRef{path, static_cast<int>(j)};

    // column of a higher cell: iterated source down to dimension d
    std::map<int, int> column;  // class -> chain index of its base object
    auto base_of = [&](int x) {
      int y = x;
      while (g.dim[y] > d) y = g.src[y];
      for (size_t j = 0; j < chain.size(); ++j)
        if (chain[j] == y) return static_cast<int>(j);
      throw ArityMismatch("cell anchored outside its column");
    };
    std::vector<std::vector<int>> columns(chain.size());
    for (int x : higher) {
      int j = base_of(x);
      if (j + 1 >= static_cast<int>(chain.size()))
        throw ArityMismatch("cell anchored at the last object");
      columns[j].push_back(x);
      column[x] = j;
      if (g.dim[x] == d + 1 && g.tgt[x] != chain[j + 1])
        throw ArityMismatch("cell endpoints straddle columns");
    }

    TreeNode node;
    for (size_t j = 0; j + 1 < chain.size(); ++j) {
      path.push_back(static_cast<int>(j));
      node.children.push_back(rec(columns[j], d + 1, path));
      path.pop_back();
    }
    return node;
  }
};

}  // namespace

SubstituteResult substitute(const PastingDiagram& pd,
                            const std::map<CellRef, PastingDiagram>& labels) {
  std::vector<CellRef> pd_cells = all_cells(pd);
  for (const CellRef& c : pd_cells) {
    auto it = labels.find(c);
    if (it == labels.end())
      throw ArityMismatch("no label for cell " + render_cell(c));
    if (it->second.ambient_dim != c.dim())
      throw DimMismatch("label for " + render_cell(c) + " has ambient " +
                        std::to_string(it->second.ambient_dim) + ", expected " +
                        std::to_string(c.dim()));
  }
  for (const CellRef& c : pd_cells) {
    if (c.dim() == 0) continue;
    PastingDiagram b = boundary(labels.at(c));
    if (!(b == labels.at(source_cell(pd, c))) ||
        !(b == labels.at(target_cell(pd, c))))
      throw ArityMismatch("label boundary of " + render_cell(c) +
                          " does not match its endpoints' labels");
  }

  // index every (pd cell, label cell) pair
  std::map<CellRef, std::vector<CellRef>> lab_cells;
  std::map<CellRef, std::map<CellRef, int>> lab_index;
  std::map<CellRef, int> offset;
  int total = 0;
  for (const CellRef& c : pd_cells) {
    auto cs = all_cells(labels.at(c));
    offset[c] = total;
    auto& idx = lab_index[c];
    for (size_t i = 0; i < cs.size(); ++i) idx[cs[i]] = static_cast<int>(i);
    total += static_cast<int>(cs.size());
    lab_cells[c] = std::move(cs);
  }
  auto id_of = [&](const CellRef& c, const CellRef& e) {
    return offset.at(c) + lab_index.at(c).at(e);
  };

  Dsu uf(total);
  for (const CellRef& c : pd_cells) {
    if (c.dim() == 0) continue;
    const PastingDiagram& L = labels.at(c);
    CellMap S = src_embed(L), T = tgt_embed(L);
    CellRef sc = source_cell(pd, c), tc = target_cell(pd, c);
    for (const CellRef& e : all_cells(boundary(L))) {
      uf.unite(id_of(sc, e), id_of(c, S.apply(e)));
      uf.unite(id_of(tc, e), id_of(c, T.apply(e)));
    }
  }

  // classes
  std::map<int, int> cls_of_root;
  std::vector<std::pair<CellRef, CellRef>> rep;  // class -> (pd cell, label cell)
  std::vector<int> cls(total, -1);
  for (const CellRef& c : pd_cells)
    for (const CellRef& e : lab_cells.at(c)) {
      int gid = id_of(c, e);
      int root = uf.find(gid);
      auto it = cls_of_root.find(root);
      if (it == cls_of_root.end()) {
        it = cls_of_root.emplace(root, static_cast<int>(rep.size())).first;
        rep.emplace_back(c, e);
      }
      cls[gid] = it->second;
    }

  Glued g;
  int nclasses = static_cast<int>(rep.size());
  g.dim.resize(nclasses);
  g.src.assign(nclasses, -1);
  g.tgt.assign(nclasses, -1);
  for (int k = 0; k < nclasses; ++k) {
    const auto& [c, e] = rep[k];
    g.dim[k] = e.dim();
    if (e.dim() >= 1) {
      g.src[k] = cls[id_of(c, source_cell(labels.at(c), e))];
      g.tgt[k] = cls[id_of(c, target_cell(labels.at(c), e))];
    }
  }

  Recognizer rc{g, {}};
  std::vector<int> ids(nclasses);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<int> path;
  TreeNode tree = rc.rec(ids, 0, path);
  SubstituteResult out;
  out.composite = make_diagram(std::move(tree), pd.ambient_dim);

  for (const CellRef& c : pd_cells) {
    CellMap m;
    m.from = labels.at(c);
    m.to = out.composite;
    for (const CellRef& e : lab_cells.at(c))
      m.map[e] = rc.out.at(cls[id_of(c, e)]);
    out.cell_maps[c] = std::move(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

std::vector<std::vector<TreeNode>> forests_with(int total);

std::vector<TreeNode> trees_with(int nodes) {
  std::vector<TreeNode> out;
  for (auto& f : forests_with(nodes - 1)) {
    TreeNode t;
    t.children = std::move(f);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<TreeNode>> forests_with(int total) {
  std::vector<std::vector<TreeNode>> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = 1; first <= total; ++first)
    for (const TreeNode& t : trees_with(first))
      for (const auto& rest : forests_with(total - first)) {
        std::vector<TreeNode> f;
        f.push_back(t);
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
  return out;
}

}  // namespace

std::vector<PastingDiagram> enumerate_diagrams(int max_cells, int max_dim) {
  std::vector<PastingDiagram> out;
  for (int nodes = 1; 2 * nodes - 1 <= max_cells; ++nodes)
    for (const TreeNode& t : trees_with(nodes)) {
      int h = tree_height(t);
      for (int ambient = h; ambient <= max_dim; ++ambient)
        out.push_back(PastingDiagram{t, ambient});
    }
  return out;
}

}  // namespace omegatt
