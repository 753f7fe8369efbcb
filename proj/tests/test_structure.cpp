#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "boxdom/decomposition.hpp"
#include "boxdom/error.hpp"
#include "boxdom/families.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/product.hpp"
#include "boxdom/rng.hpp"
#include "boxdom/solver.hpp"
#include "oracles.hpp"

using namespace boxdom;

namespace {

oracle::AdjGraph to_oracle(const Graph& g) {
  oracle::AdjGraph o(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) o.add_edge(u, v);
  return o;
}

bool same_adjacency(const Graph& g, const oracle::AdjGraph& o) {
  if (g.order() != o.n) return false;
  for (int u = 0; u < o.n; ++u)
    for (int v = 0; v < o.n; ++v)
      if (g.adjacent(u, v) != o.adj[u][v]) return false;
  return true;
}

}  // namespace

TEST_CASE("product indexing is a bijection with the documented layout") {
  ProductGraph pr(path_graph(3), path_graph(4));
  CHECK(pr.g_size() == 3);
  CHECK(pr.h_size() == 4);
  CHECK(pr.base().order() == 12);
  for (int gv = 0; gv < 3; ++gv)
    for (int hv = 0; hv < 4; ++hv) {
      int id = pr.index(gv, hv);
      CHECK(id == hv * 3 + gv);
      CHECK(pr.coord(id) == std::pair<int, int>{gv, hv});
    }
}

TEST_CASE("product frozen shapes") {
  ProductGraph c4(path_graph(2), path_graph(2));  // K2 box K2 = C4
  CHECK(c4.base().order() == 4);
  CHECK(c4.base().edge_count() == 4);
  CHECK(c4.base().degree_sequence() == std::vector<int>{2, 2, 2, 2});

  ProductGraph q3(cycle_graph(4), path_graph(2));  // C4 box K2 = Q3
  CHECK(q3.base().order() == 8);
  CHECK(q3.base().edge_count() == 12);
  CHECK(q3.base().max_degree() == 3);
  CHECK(domination_number(q3.base()) == 2);

  ProductGraph grid(path_graph(3), path_graph(3));
  CHECK(grid.base().order() == 9);
  CHECK(grid.base().edge_count() == 12);
  CHECK(domination_number(grid.base()) == 3);

  CHECK(domination_number(ProductGraph(cycle_graph(4), path_graph(3)).base()) ==
        3);
  CHECK(domination_number(ProductGraph(cycle_graph(4), cycle_graph(4)).base()) ==
        4);
  CHECK(domination_number(ProductGraph(path_graph(5), path_graph(2)).base()) ==
        3);
}

TEST_CASE("product adjacency matches the oracle on random factors") {
  SplitMix64 seeds(99);
  for (int trial = 0; trial < 12; ++trial) {
    int n1 = 1 + int(seeds.below(5)), n2 = 1 + int(seeds.below(5));
    Graph g = gnp_graph(n1, Rat(1, 2), seeds.next());
    Graph h = gnp_graph(n2, Rat(1, 2), seeds.next());
    ProductGraph pr(g, h);
    CHECK(same_adjacency(pr.base(), oracle::product(to_oracle(g), to_oracle(h))));
  }
}

TEST_CASE("product over the order cap is refused") {
  CHECK_THROWS_AS(ProductGraph(path_graph(13), path_graph(10)), LimitError);
  CHECK(ProductGraph(path_graph(16), path_graph(8)).base().order() == 128);
}

TEST_CASE("decomposition of C4 over the diagonal basis") {
  Graph c4 = cycle_graph(4);
  CellDecomposition dec = decompose(c4, {0, 2});
  CHECK(dec.k() == 2);
  CHECK(dec.basis == std::vector<int>{0, 2});
  CHECK(dec.cells[0].to_vector() == std::vector<int>{0});
  CHECK(dec.cells[1].to_vector() == std::vector<int>{2});
  CHECK(dec.private_parts[0].empty());
  CHECK(dec.private_parts[1].empty());
  REQUIRE(dec.shared.size() == 1);
  const auto& [key, members] = *dec.shared.begin();
  CHECK(key == iset::from({0, 1}));
  CHECK(members.to_vector() == std::vector<int>{1, 3});

  CHECK(dec.position_of[0] == 0);
  CHECK(dec.position_of[2] == 1);
  CHECK(dec.position_of[1] == -1);
  CHECK(dec.is_shared(1));
  CHECK_FALSE(dec.is_shared(0));
  CHECK(dec.class_of(0) == iset::single(0));
  CHECK(dec.class_of(1) == iset::from({0, 1}));
  CHECK(dec.basis_open[1] == iset::from({0, 1}));
  CHECK(dec.basis_closed[0] == iset::single(0));  // 0 and 2 not adjacent
  CHECK(dec.basis_closed[1] == iset::from({0, 1}));
}

TEST_CASE("decomposition of C4 over an adjacent basis") {
  Graph c4 = cycle_graph(4);
  CellDecomposition dec = decompose(c4, {0, 1});
  CHECK(dec.cells[0].to_vector() == std::vector<int>{0, 3});
  CHECK(dec.cells[1].to_vector() == std::vector<int>{1, 2});
  CHECK(dec.shared.empty());
  CHECK(dec.private_parts[0].to_vector() == std::vector<int>{3});
  CHECK(dec.class_of(3) == iset::single(0));
  // Basis vertices adjacent to each other: closed cover has both indices.
  CHECK(dec.basis_closed[0] == iset::from({0, 1}));
  CHECK(dec.basis_open[0] == iset::single(1));
}

TEST_CASE("decomposition of P4 and of a single-cell graph") {
  Graph g4 = path_graph(4);
  CellDecomposition p4 = decompose(g4, {0, 3});
  CHECK(p4.cells[0].to_vector() == std::vector<int>{0, 1});
  CHECK(p4.cells[1].to_vector() == std::vector<int>{2, 3});
  CHECK(p4.shared.empty());

  Graph g3 = path_graph(3);
  CellDecomposition p3 = decompose(g3, {1});
  CHECK(p3.k() == 1);
  CHECK(p3.cells[0].to_vector() == std::vector<int>{0, 1, 2});
  CHECK(p3.private_parts[0].to_vector() == std::vector<int>{0, 2});
}

TEST_CASE("cells partition the vertex set on the corpus") {
  std::ifstream in(std::string(BOXDOM_TEST_DATA_DIR) + "/connected_le6.g6");
  REQUIRE(in.good());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = parse_graph6(line);
    CellDecomposition dec = decompose(g, min_dominating_set(g).to_vector());
    VertexSet seen(g.order());
    int total = 0;
    for (const auto& cell : dec.cells) {
      CHECK((seen & cell).empty());
      seen = seen | cell;
      total += cell.count();
    }
    for (const auto& [key, members] : dec.shared) {
      CHECK(iset::count(key) >= 2);
      CHECK((seen & members).empty());
      seen = seen | members;
      total += members.count();
      members.for_each([&](int v) { CHECK(dec.basis_open[v] == key); });
    }
    CHECK(total == g.order());
    CHECK(seen.count() == g.order());
    // Private parts really are private: exactly one open basis neighbor.
    for (int i = 0; i < dec.k(); ++i)
      dec.private_parts[i].for_each([&](int v) {
        CHECK(dec.basis_open[v] == iset::single(i));
      });
  }
}

TEST_CASE("decompose refuses a non-gamma basis") {
  CHECK_THROWS_AS(decompose(cycle_graph(4), {0}), ContractError);
  CHECK_THROWS_AS(decompose(cycle_graph(4), {0, 1, 2}), ContractError);
  CHECK_THROWS_AS(decompose(path_graph(4), {0, 1}), ContractError);  // size ok, not dominating
}

TEST_CASE("chamber frozen examples") {
  Graph c4 = cycle_graph(4);
  CellDecomposition dec = decompose(c4, {0, 2});
  CHECK(chamber(dec, iset::from({0, 1})).to_vector() ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(chamber(dec, iset::single(0)).to_vector() == std::vector<int>{0});
  CHECK(chamber(dec, iset::empty).empty());

  CellDecomposition adj = decompose(c4, {0, 1});
  CHECK(chamber(adj, iset::single(0)).to_vector() == std::vector<int>{0, 3});
  CHECK(chamber(adj, iset::single(1)).to_vector() == std::vector<int>{1, 2});
}

TEST_CASE("fiber views on the cube") {
  Graph g = cycle_graph(4), h = path_graph(2);
  ProductGraph pr(g, h);
  CellDecomposition dec = decompose(g, {0, 1});
  VertexSet d(8);
  d.set(pr.index(0, 0));
  d.set(pr.index(2, 1));
  auto views = fiber_views(pr, dec, d);
  REQUIRE(views.size() == 2);
  CHECK(views[0].h == 0);
  CHECK(views[0].d_h.to_vector() == std::vector<int>{0});
  CHECK(views[0].undominated == iset::empty);
  CHECK(views[0].ell == 0);
  CHECK(views[1].d_h.to_vector() == std::vector<int>{2});
  CHECK(views[1].undominated == iset::empty);

  CHECK(vertically_undominated_vertices(pr, d, 0).to_vector() ==
        std::vector<int>{1, 3});
  CHECK(vertically_undominated_vertices(pr, d, 1).to_vector() ==
        std::vector<int>{1, 3});
}

TEST_CASE("fiber views catch a non-dominating set") {
  Graph g = path_graph(3), h = path_graph(3);
  ProductGraph pr(g, h);
  CellDecomposition dec = decompose(g, {1});
  VertexSet d(9);
  d.set(pr.index(1, 0));
  d.set(pr.index(1, 2));
  CHECK_FALSE(is_dominating(pr.base(), d));
  CHECK_THROWS_AS(fiber_views(pr, dec, d), ContractError);
}

TEST_CASE("undominated cells: shared carriers leave basis cells empty") {
  // C4 box K1, basis {0,2}, D = {(1,0),(3,0)}: both members are shared
  // carriers, so both basis cells are vertically undominated.
  Graph g = cycle_graph(4), h = path_graph(1);
  ProductGraph pr(g, h);
  CellDecomposition dec = decompose(g, {0, 2});
  VertexSet d(4);
  d.set(pr.index(1, 0));
  d.set(pr.index(3, 0));
  REQUIRE(is_dominating(pr.base(), d));
  auto views = fiber_views(pr, dec, d);
  REQUIRE(views.size() == 1);
  CHECK(views[0].undominated == iset::from({0, 1}));
  CHECK(views[0].ell == 2);
  CHECK(views[0].d_h.to_vector() == std::vector<int>{1, 3});
  CHECK(vertically_undominated_vertices(pr, d, 0).to_vector() ==
        std::vector<int>{0, 2});
}
