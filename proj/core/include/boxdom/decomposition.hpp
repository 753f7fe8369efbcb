#pragma once

#include <map>
#include <vector>

#include "boxdom/graph.hpp"
#include "boxdom/index_set.hpp"
#include "boxdom/product.hpp"

namespace boxdom {

// Partition of V(G) induced by an ordered gamma-set (the basis): cell Q_i is
// the basis vertex v_i plus its private neighbors; every other vertex lands
// in the shared class P_S keyed by its exact open basis neighborhood S,
// |S| >= 2. Index sets are over basis positions (0-based), never vertex ids.
struct CellDecomposition {
  const Graph* graph = nullptr;
  std::vector<int> basis;               // sorted vertex ids
  std::vector<VertexSet> cells;         // Q_i, by basis position
  std::vector<VertexSet> private_parts; // P_i = Q_i minus the basis vertex
  std::map<IndexSet, VertexSet> shared; // S -> P_S, only nonempty classes

  // Per vertex: open basis neighborhood {i : v adjacent to v_i}.
  std::vector<IndexSet> basis_open;
  // Per vertex: closed version {i : v in N[v_i]} (adds i at v_i itself).
  std::vector<IndexSet> basis_closed;
  // Per vertex: basis position if the vertex is a basis member, else -1.
  std::vector<int> position_of;

  int k() const { return int(basis.size()); }

  // Vertex's class: its own cell for basis and private vertices, the shared
  // key otherwise.
  bool is_shared(int v) const { return position_of[v] < 0 && iset::count(basis_open[v]) >= 2; }
  IndexSet class_of(int v) const;
};

// Builds the decomposition; the basis must be a gamma-set (checked: it
// dominates and has size gamma(g)).
CellDecomposition decompose(const Graph& g, const std::vector<int>& basis);

// Q_I together with every shared class P_S, S a subset of I.
VertexSet chamber(const CellDecomposition& dec, IndexSet I);

// Per-fiber snapshot: the dominating set's trace in the fiber and the
// vertically undominated cell indices.
struct FiberView {
  int h = 0;
  VertexSet d_h;          // G-vertex ids of D members in this fiber
  IndexSet undominated;   // I^h: cells with (Q_i x N_H[h]) disjoint from D
  int ell = 0;            // |I^h|
};

// One view per h; d must dominate the product.
std::vector<FiberView> fiber_views(const ProductGraph& prod,
                                   const CellDecomposition& dec,
                                   const VertexSet& d);

// G-vertices v with ({v} x N_H[h]) disjoint from D.
VertexSet vertically_undominated_vertices(const ProductGraph& prod,
                                          const VertexSet& d, int h);

}  // namespace boxdom
