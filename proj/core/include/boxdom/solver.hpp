#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "boxdom/graph.hpp"

namespace boxdom {

// A dominating set is just a vertex set paired with its graph by the caller;
// the alias marks intent in signatures.
using DominatingSet = VertexSet;

struct SolveOptions {
  // Wall-clock budget for one exact computation; absent means unlimited.
  std::optional<std::chrono::milliseconds> budget;
};

bool is_dominating(const Graph& g, const VertexSet& s);

// Classic greedy cover; returns the size and optionally the set. Used to
// seed branch-and-bound pruning.
int greedy_domination_upper(const Graph& g, VertexSet* out = nullptr);

// Size of a greedily built family of pairwise disjoint closed
// neighborhoods; every dominating set has at least this many vertices.
int packing_lower_bound(const Graph& g);

// Exact domination number by branch and bound: branch over the closed
// neighborhood of an undominated vertex with the fewest remaining
// dominators, partitioning by a growing forbidden set. Throws TimeoutError
// (carrying the best known bounds) if the budget runs out.
int domination_number(const Graph& g, const SolveOptions& opt = {});

// The lexicographically least minimum dominating set.
VertexSet min_dominating_set(const Graph& g, const SolveOptions& opt = {});

// Yields every gamma-set exactly once, in lexicographic member order. The
// callback returns false to stop early.
void enumerate_gamma_sets(const Graph& g,
                          const std::function<bool(const VertexSet&)>& yield,
                          const SolveOptions& opt = {});

std::vector<VertexSet> gamma_sets(const Graph& g);

// max over all vertices v of |d intersect N[v]|; requires d to dominate.
int allegiance(const Graph& g, const VertexSet& d);

// Minimum allegiance over all gamma-sets (the closed-neighborhood power).
// Connected input required; early-exits when allegiance 1 is found.
int power_closed(const Graph& g);

// The open-neighborhood condition: every vertex v outside s has
// 1 <= |N(v) intersect s| <= k.
bool is_1k_set(const Graph& g, const VertexSet& s, int k);

// Minimum size of a [1,k]-set (V always qualifies, so this is total).
int gamma_1k(const Graph& g, int k);

// Least k >= 1 with gamma_1k(g, k) == gamma(g). Connected input required.
int power_open(const Graph& g);

struct PowerReport {
  int gamma = 0;
  long num_gamma_sets = 0;
  VertexSet witness_set;          // lex-least gamma-set of minimum allegiance
  int allegiance_of_witness = 0;  // == power_closed
  int power_closed = 0;
  int power_open = 0;
  bool agree = false;
};

PowerReport power_report(const Graph& g);

}  // namespace boxdom
