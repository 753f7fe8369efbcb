#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boxdom/bitset.hpp"

namespace boxdom {

// Immutable simple undirected graph with bitset adjacency rows. Vertex ids
// are 0..n-1. Construction validates symmetry and irreflexivity; algorithms
// take const references and are safe to run concurrently.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kMaxBits;

  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::string name = "");

  // Adopts prebuilt adjacency rows (validated).
  explicit Graph(std::vector<VertexSet> rows, std::string name = "");

  int order() const { return n_; }
  long edge_count() const { return edges_; }
  const std::string& name() const { return name_; }

  bool adjacent(int u, int v) const { return open_[u].test(v); }
  const VertexSet& neighbors(int v) const { return open_[v]; }
  const VertexSet& closed_neighbors(int v) const { return closed_[v]; }
  int degree(int v) const { return open_[v].count(); }
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // ascending

  bool is_connected() const;

 private:
  void finish(std::string name);

  int n_ = 0;
  long edges_ = 0;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::string name_;
};

// True iff no 4-vertex subset induces K_{1,3}. Decided by scanning
// 4-subsets: among 4-vertex graphs, only the claw has induced degree
// multiset (3,1,1,1).
bool is_claw_free(const Graph& g);

// True iff no 4-vertex subset induces a path on 4 vertices; (2,2,1,1) is the
// degree multiset unique to P_4 among 4-vertex graphs.
bool is_p4_free(const Graph& g);

}  // namespace boxdom
