#include "boxdom/product.hpp"

#include "boxdom/error.hpp"

namespace boxdom {

ProductGraph::ProductGraph(const Graph& g, const Graph& h) : g_(g), h_(h) {
  if (g.order() == 0 || h.order() == 0)
    throw ArgumentError("product factors must be nonempty");
  long n = long(g.order()) * h.order();
  if (n > Graph::kMaxOrder)
    throw LimitError("product order " + std::to_string(n) +
                     " exceeds the supported cap of " +
                     std::to_string(Graph::kMaxOrder));
  std::vector<VertexSet> rows(std::size_t(n), VertexSet{int(n)});
  for (int hv = 0; hv < h.order(); ++hv)
    for (int gv = 0; gv < g.order(); ++gv) {
      VertexSet& row = rows[std::size_t(index(gv, hv))];
      g.neighbors(gv).for_each([&](int gu) { row.set(index(gu, hv)); });
      h.neighbors(hv).for_each([&](int hu) { row.set(index(gv, hu)); });
    }
  std::string name = g.name().empty() || h.name().empty()
                         ? std::string()
                         : g.name() + " x " + h.name();
  base_ = Graph(std::move(rows), std::move(name));
}

}  // namespace boxdom
