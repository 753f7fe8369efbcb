#pragma once

#include <cstdint>
#include <string>

#include "boxdom/graph.hpp"
#include "boxdom/rational.hpp"

namespace boxdom {

Graph path_graph(int n);      // n >= 1
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
Graph star_graph(int n);      // n >= 1 total vertices; center is vertex 0

// Erdos-Renyi G(n,p) with exact rational p in [0,1]. Pairs (u,v), u < v, are
// visited in lexicographic order; the edge is present iff the next
// splitmix64 draw is below floor(p * 2^64). Deterministic in (n, p, seed).
Graph gnp_graph(int n, const Rat& p, std::uint64_t seed);

// Token grammar used by the CLI and sweep configs: K<n>, P<n>, C<n>, S<n>
// (complete, path, cycle, star on <n> vertices) or g6:<graph6>.
Graph parse_graph_token(const std::string& token);

}  // namespace boxdom
