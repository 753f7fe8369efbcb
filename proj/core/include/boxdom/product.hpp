#pragma once

#include <utility>

#include "boxdom/graph.hpp"

namespace boxdom {

// The Cartesian product G box H with the factor graphs kept alongside.
// Vertex (g,h) has id h*|G| + g, so the G-fiber over h is the contiguous id
// range [h*|G|, (h+1)*|G|).
class ProductGraph {
 public:
  ProductGraph(const Graph& g, const Graph& h);

  const Graph& base() const { return base_; }
  const Graph& g() const { return g_; }
  const Graph& h() const { return h_; }
  int g_size() const { return g_.order(); }
  int h_size() const { return h_.order(); }

  int index(int gv, int hv) const { return hv * g_.order() + gv; }
  std::pair<int, int> coord(int v) const {
    return {v % g_.order(), v / g_.order()};
  }

 private:
  Graph g_, h_, base_;
};

}  // namespace boxdom
