#include "boxdom/decomposition.hpp"

#include <algorithm>

#include "boxdom/error.hpp"
#include "boxdom/solver.hpp"

namespace boxdom {

IndexSet CellDecomposition::class_of(int v) const {
  // Basis: its own position. Private: the single open index. Shared: S.
  if (position_of[v] >= 0) return iset::single(position_of[v]);
  return basis_open[v];
}

CellDecomposition decompose(const Graph& g, const std::vector<int>& basis_in) {
  CellDecomposition dec;
  dec.graph = &g;
  dec.basis = basis_in;
  std::sort(dec.basis.begin(), dec.basis.end());
  int k = int(dec.basis.size());
  if (k == 0) throw ArgumentError("empty basis");
  if (k > 64) throw LimitError("basis size is capped at 64 positions");
  if (std::adjacent_find(dec.basis.begin(), dec.basis.end()) !=
      dec.basis.end())
    throw ArgumentError("basis has repeated vertices");

  int n = g.order();
  VertexSet basis_set(n);
  for (int v : dec.basis) {
    if (v < 0 || v >= n) throw ArgumentError("basis vertex out of range");
    basis_set.set(v);
  }
  if (!is_dominating(g, basis_set))
    throw ContractError("basis does not dominate the graph");
  if (k != domination_number(g))
    throw ContractError("basis is not minimum: |basis| != gamma");

  dec.position_of.assign(n, -1);
  for (int i = 0; i < k; ++i) dec.position_of[dec.basis[i]] = i;

  dec.basis_open.assign(n, 0);
  dec.basis_closed.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i)
      if (g.adjacent(v, dec.basis[i])) dec.basis_open[v] = iset::with(dec.basis_open[v], i);
    dec.basis_closed[v] = dec.basis_open[v];
    if (dec.position_of[v] >= 0)
      dec.basis_closed[v] = iset::with(dec.basis_closed[v], dec.position_of[v]);
  }

  dec.cells.assign(k, VertexSet(n));
  dec.private_parts.assign(k, VertexSet(n));
  for (int i = 0; i < k; ++i) dec.cells[i].set(dec.basis[i]);
  for (int v = 0; v < n; ++v) {
    if (dec.position_of[v] >= 0) continue;
    IndexSet s = dec.basis_open[v];
    int c = iset::count(s);
    if (c == 0)
      throw ContractError("non-basis vertex with empty basis neighborhood");
    if (c == 1) {
      int i = iset::lowest(s);
      dec.private_parts[i].set(v);
      dec.cells[i].set(v);
    } else {
      auto [it, fresh] = dec.shared.try_emplace(s, VertexSet(n));
      it->second.set(v);
    }
  }
  return dec;
}

VertexSet chamber(const CellDecomposition& dec, IndexSet I) {
  VertexSet out(dec.graph->order());
  iset::for_each(I, [&](int i) {
    if (i >= dec.k()) throw ArgumentError("chamber index out of range");
    out |= dec.cells[i];
  });
  for (const auto& [s, members] : dec.shared)
    if (iset::is_subset(s, I)) out |= members;
  return out;
}

std::vector<FiberView> fiber_views(const ProductGraph& prod,
                                   const CellDecomposition& dec,
                                   const VertexSet& d) {
  if (!is_dominating(prod.base(), d))
    throw ContractError("fiber_views requires a dominating set of the product");
  int ng = prod.g_size(), nh = prod.h_size();
  std::vector<VertexSet> d_rows(nh, VertexSet(ng));
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      if (d.test(prod.index(g, h))) d_rows[h].set(g);

  std::vector<FiberView> views(nh);
  for (int h = 0; h < nh; ++h) {
    FiberView& fv = views[h];
    fv.h = h;
    fv.d_h = d_rows[h];
    VertexSet vertical = d_rows[h];  // union of D-rows over N_H[h]
    prod.h().neighbors(h).for_each([&](int hn) { vertical |= d_rows[hn]; });
    fv.undominated = 0;
    for (int i = 0; i < dec.k(); ++i)
      if (!dec.cells[i].intersects(vertical))
        fv.undominated = iset::with(fv.undominated, i);
    fv.ell = iset::count(fv.undominated);
  }
  return views;
}

VertexSet vertically_undominated_vertices(const ProductGraph& prod,
                                          const VertexSet& d, int h) {
  int ng = prod.g_size();
  if (h < 0 || h >= prod.h_size()) throw ArgumentError("fiber index out of range");
  VertexSet vertical(ng);
  auto absorb = [&](int hv) {
    for (int g = 0; g < ng; ++g)
      if (d.test(prod.index(g, hv))) vertical.set(g);
  };
  absorb(h);
  prod.h().neighbors(h).for_each(absorb);
  return ~vertical;
}

}  // namespace boxdom
