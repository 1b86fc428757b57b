#include "omegatt/contexts.hpp"

#include "omegatt/errors.hpp"

namespace omegatt {

std::string cell_var_name(int dim, int index) {
  return "x" + std::to_string(dim) + "_" + std::to_string(index);
}

DiagramContext gamma(const PastingDiagram& pd) {
  DiagramContext ctx;
  ctx.diagram = pd;
  std::map<CellRef, TypePtr> type_of;
  int h = tree_height(pd.tree);
  for (int k = 0; k <= h; ++k) {
    auto cs = cells(pd, k);
    for (size_t j = 0; j < cs.size(); ++j) {
      const CellRef& c = cs[j];
      std::string name = cell_var_name(k, static_cast<int>(j));
      TypePtr ty;
      if (k == 0) {
        ty = base_type();
      } else {
        CellRef s = source_cell(pd, c), t = target_cell(pd, c);
        ty = id_type(type_of.at(s), mk_var(ctx.var_of.at(s)),
                     mk_var(ctx.var_of.at(t)));
      }
      type_of[c] = ty;
      ctx.var_of[c] = name;
      ctx.cell_of[name] = c;
      ctx.telescope.entries.push_back({std::move(name), std::move(ty)});
    }
  }
  return ctx;
}

namespace {

ContextMap projection(const PastingDiagram& pd, const CellMap& emb) {
  DiagramContext big = gamma(pd);
  DiagramContext small = gamma(boundary(pd));
  ContextMap out;
  out.source = big.telescope;
  out.target = small.telescope;
  for (const auto& e : small.telescope.entries)
    out.terms.push_back(mk_var(big.var_of.at(emb.apply(small.cell_of.at(e.name)))));
  return out;
}

}  // namespace

ContextMap src_map(const PastingDiagram& pd) {
  return projection(pd, src_embed(pd));
}

ContextMap tgt_map(const PastingDiagram& pd) {
  return projection(pd, tgt_embed(pd));
}

namespace {

ContextMap collapse_ctx_map(const PastingDiagram& pd, const CellRef& c) {
  auto [minus, cmap] = remove_cell(pd, c);
  DiagramContext big = gamma(pd);
  DiagramContext small = gamma(minus);
  std::map<CellRef, CellRef> inverse;  // cells of pd -> cells of minus
  for (const CellRef& e : all_cells(minus)) inverse[cmap.apply(e)] = e;

  CellRef s = source_cell(pd, c);
  CellRef t = target_cell(pd, c);
  TermPtr collapsed = mk_var(small.var_of.at(inverse.at(s)));

  ContextMap out;
  out.source = small.telescope;
  out.target = big.telescope;
  for (const auto& entry : big.telescope.entries) {
    const CellRef& e = big.cell_of.at(entry.name);
    if (e == c)
      out.terms.push_back(mk_refl(collapsed));
    else if (e == t)
      out.terms.push_back(collapsed);
    else
      out.terms.push_back(mk_var(small.var_of.at(inverse.at(e))));
  }
  return out;
}

}  // namespace

CollapseMaps collapse_map(const PastingDiagram& pd, const CellRef& c) {
  int n = pd.ambient_dim;
  int k = c.dim();
  CollapseMaps out;
  out.h = collapse_ctx_map(pd, c);
  for (int i = 0; i < n; ++i) {
    PastingDiagram d = boundary_iter(pd, n - i);
    if (i >= k) {
      // the i-fold boundary still contains c as a top cell
      out.h_src.push_back(collapse_ctx_map(d, c));
    } else {
      out.h_src.push_back(identity_ctx_map(gamma(d).telescope));
    }
    out.h_tgt.push_back(out.h_src.back());
  }
  return out;
}

ContextMap initial_map(const Telescope& g) {
  std::string x = "x0_0";
  Telescope point;
  point.entries.push_back({x, base_type()});
  ContextMap out;
  out.source = point;
  out.target = g;
  for (const auto& e : g.entries)
    out.terms.push_back(refl_iter(mk_var(x), id_depth(e.type)));
  if (Check c = check_ctx_map(out); !c)
    throw UnsupportedType(
        "context is not within the iterated-identity fragment over the base "
        "type:\n" +
        c.message());
  return out;
}

}  // namespace omegatt
