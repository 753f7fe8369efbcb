#include "boxdom/graph.hpp"

#include <algorithm>

#include "boxdom/error.hpp"

namespace boxdom {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::string name) {
  if (n < 0 || n > kMaxOrder)
    throw LimitError("graph order out of range: " + std::to_string(n));
  n_ = n;
  open_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("self-loop rejected");
    open_[u].set(v);
    open_[v].set(u);
  }
  finish(std::move(name));
}

Graph::Graph(std::vector<VertexSet> rows, std::string name) {
  int n = int(rows.size());
  if (n > kMaxOrder)
    throw LimitError("graph order out of range: " + std::to_string(n));
  n_ = n;
  open_ = std::move(rows);
  for (int v = 0; v < n; ++v) {
    if (open_[v].universe() != n)
      throw ArgumentError("adjacency row universe mismatch");
    if (open_[v].test(v)) throw ArgumentError("self-loop rejected");
    open_[v].for_each([&](int u) {
      if (!open_[u].test(v)) throw ArgumentError("asymmetric adjacency");
    });
  }
  finish(std::move(name));
}

void Graph::finish(std::string name) {
  name_ = std::move(name);
  closed_.resize(n_, VertexSet(n_));
  long deg_sum = 0;
  for (int v = 0; v < n_; ++v) {
    closed_[v] = open_[v];
    closed_[v].set(v);
    deg_sum += open_[v].count();
  }
  edges_ = deg_sum / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  VertexSet seen(n_), frontier(n_);
  seen.set(0);
  frontier.set(0);
  while (!frontier.empty()) {
    VertexSet next(n_);
    frontier.for_each([&](int v) { next |= open_[v]; });
    frontier = next - seen;
    seen |= next;
  }
  return seen.is_full();
}

namespace {

// True iff some 4-subset induces the given sorted degree multiset.
bool any_4_subset_with_profile(const Graph& g, int packed) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int ab = g.adjacent(a, b), ac = g.adjacent(a, c),
              ad = g.adjacent(a, d), bc = g.adjacent(b, c),
              bd = g.adjacent(b, d), cd = g.adjacent(c, d);
          int da = ab + ac + ad, db = ab + bc + bd, dc = ac + bc + cd,
              dd = ad + bd + cd;
          int degs[4] = {da, db, dc, dd};
          std::sort(degs, degs + 4);
          if ((degs[0] << 9 | degs[1] << 6 | degs[2] << 3 | degs[3]) == packed)
            return true;
        }
  return false;
}

int pack_profile(int a, int b, int c, int d) {
  return a << 9 | b << 6 | c << 3 | d;
}

}  // namespace

bool is_claw_free(const Graph& g) {
  return !any_4_subset_with_profile(g, pack_profile(1, 1, 1, 3));
}

bool is_p4_free(const Graph& g) {
  return !any_4_subset_with_profile(g, pack_profile(1, 1, 2, 2));
}

}  // namespace boxdom
