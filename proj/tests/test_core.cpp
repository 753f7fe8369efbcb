#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "boxdom/bitset.hpp"
#include "boxdom/error.hpp"
#include "boxdom/families.hpp"
#include "boxdom/graph.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/index_set.hpp"
#include "boxdom/rational.hpp"
#include "boxdom/rng.hpp"
#include "oracles.hpp"

using namespace boxdom;

namespace {

std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(std::string(BOXDOM_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

bool same_adjacency(const Graph& g, const oracle::AdjGraph& o) {
  if (g.order() != o.n) return false;
  for (int u = 0; u < o.n; ++u)
    for (int v = 0; v < o.n; ++v)
      if (g.adjacent(u, v) != o.adj[u][v]) return false;
  return true;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(10);
  CHECK(s.empty());
  CHECK(s.universe() == 10);
  s.set(0);
  s.set(7);
  s.set(9);
  CHECK(s.count() == 3);
  CHECK(s.test(7));
  CHECK_FALSE(s.test(8));
  s.reset(7);
  CHECK(s.count() == 2);
  CHECK(s.to_vector() == std::vector<int>{0, 9});

  VertexSet t = VertexSet::of(10, {0, 1});
  CHECK((s & t).to_vector() == std::vector<int>{0});
  CHECK((s | t).to_vector() == std::vector<int>{0, 1, 9});
  CHECK((s ^ t).to_vector() == std::vector<int>{1, 9});
  CHECK((s - t).to_vector() == std::vector<int>{9});
  CHECK((~t).count() == 8);
  CHECK(VertexSet::full(10).count() == 10);

  int sum = 0;
  s.for_each([&](int v) { sum += v; });
  CHECK(sum == 9);
}

TEST_CASE("vertex set order and edges of the word span") {
  // 128-bit universes exercise both words.
  VertexSet a = VertexSet::of(128, {0, 127});
  CHECK(a.count() == 2);
  CHECK(a.test(127));
  CHECK((~a).count() == 126);

  VertexSet b = VertexSet::of(128, {1});
  CHECK(VertexSet::of(128, {0}).lex_less(b));
  CHECK(VertexSet::of(128, {0, 5}).lex_less(b));
  CHECK(b.lex_less(VertexSet::of(128, {1, 100})));
  CHECK_FALSE(b.lex_less(b));
}

TEST_CASE("index set basics") {
  IndexSet s = iset::from({0, 2, 5});
  CHECK(iset::count(s) == 3);
  CHECK(iset::test(s, 2));
  CHECK_FALSE(iset::test(s, 1));
  CHECK(iset::lowest(s) == 0);
  CHECK(iset::next(s, 0) == 2);
  CHECK(iset::next(s, 2) == 5);
  CHECK(iset::next(s, 5) == -1);
  CHECK(iset::without(iset::with(iset::empty, 3), 3) == iset::empty);
  CHECK(iset::is_subset(iset::from({0, 2}), s));
  CHECK_FALSE(iset::is_subset(iset::from({0, 1}), s));
  CHECK(iset::full(3) == iset::from({0, 1, 2}));
  CHECK(iset::to_vector(s) == std::vector<int>{0, 2, 5});
  CHECK(iset::to_string(s) == "{0,2,5}");
  CHECK(iset::to_string(iset::empty) == "{}");
}

TEST_CASE("index set lexicographic order") {
  // {0,2} < {0,3} < {1} < {1,3}; empty set first.
  CHECK(iset::lex_less(iset::from({0, 2}), iset::from({0, 3})));
  CHECK(iset::lex_less(iset::from({0, 3}), iset::from({1})));
  CHECK(iset::lex_less(iset::from({1}), iset::from({1, 3})));
  CHECK(iset::lex_less(iset::empty, iset::from({0})));
  CHECK_FALSE(iset::lex_less(iset::from({1}), iset::from({1})));
  CHECK_FALSE(iset::lex_less(iset::from({1, 3}), iset::from({1})));
}

TEST_CASE("rational helpers") {
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(3)) == 3);
  CHECK(rat_ceil(Rat(-1, 2)) == 0);
  CHECK(rat_ceil(Rat(-3, 2)) == -1);
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_str(Rat(3, 2)) == "3/2");
  CHECK(rat_str(Rat(8, 4)) == "2");
  CHECK(rat_str(Rat(-5, 3)) == "-5/3");
  CHECK(parse_rat("7/3") == Rat(7, 3));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK_THROWS_AS(parse_rat("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rat("x"), ArgumentError);
}

TEST_CASE("splitmix64 reference vector") {
  // Canonical splitmix64 outputs for seed 0.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  SplitMix64 a(0xDEADBEEFull), b(0xDEADBEEFull);
  CHECK(a.next() == b.next());
  SplitMix64 child = a.split();
  CHECK(child.next() != a.next());
  for (int i = 0; i < 1000; ++i) CHECK(b.below(7) < 7);
  CHECK(SplitMix64(1).below(0) == 0);
}

TEST_CASE("graph construction and validation") {
  Graph p4 = path_graph(4);
  CHECK(p4.order() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(0, 1));
  CHECK(p4.adjacent(1, 0));
  CHECK_FALSE(p4.adjacent(0, 2));
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  CHECK(p4.max_degree() == 2);
  CHECK(p4.closed_neighbors(1).to_vector() == std::vector<int>{0, 1, 2});
  CHECK(p4.neighbors(1).to_vector() == std::vector<int>{0, 2});
  CHECK(p4.is_connected());
  CHECK(p4.degree_sequence() == std::vector<int>{1, 1, 2, 2});

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), ArgumentError);   // loop
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), ArgumentError);   // out of range
  CHECK(Graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);  // dedup both orders

  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(two.is_connected());
}

TEST_CASE("families") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(cycle_graph(3).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(1).order() == 1);
  CHECK(path_graph(1).edge_count() == 0);

  Graph s5 = star_graph(5);  // K_{1,4}
  CHECK(s5.order() == 5);
  CHECK(s5.edge_count() == 4);
  CHECK(s5.degree(0) == 4);
  CHECK(s5.degree(1) == 1);

  CHECK_THROWS_AS(path_graph(0), ArgumentError);
  CHECK_THROWS_AS(cycle_graph(2), ArgumentError);
  CHECK_THROWS_AS(complete_graph(0), ArgumentError);
  CHECK_THROWS_AS(star_graph(0), ArgumentError);
}

TEST_CASE("gnp graph determinism and extremes") {
  Graph a = gnp_graph(10, Rat(1, 3), 42);
  Graph b = gnp_graph(10, Rat(1, 3), 42);
  CHECK(emit_graph6(a) == emit_graph6(b));
  Graph c = gnp_graph(10, Rat(1, 3), 43);
  CHECK(emit_graph6(a) != emit_graph6(c));  // one collision would be absurd
  CHECK(gnp_graph(8, Rat(1), 7).edge_count() == 28);
  CHECK(gnp_graph(8, Rat(0), 7).edge_count() == 0);
  CHECK_THROWS_AS(gnp_graph(3, Rat(3, 2), 1), ArgumentError);
  CHECK_THROWS_AS(gnp_graph(3, Rat(-1, 2), 1), ArgumentError);
}

TEST_CASE("graph token grammar") {
  CHECK(parse_graph_token("K5").edge_count() == 10);
  CHECK(parse_graph_token("P4").edge_count() == 3);
  CHECK(parse_graph_token("C6").order() == 6);
  CHECK(parse_graph_token("S3").degree(0) == 2);
  CHECK(parse_graph_token("g6:A_").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph_token("Z4"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_token("P"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_token("Px"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_token(""), ArgumentError);
}

TEST_CASE("graph6 frozen values") {
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("@").edge_count() == 0);
  CHECK(parse_graph6("A_").order() == 2);
  CHECK(parse_graph6("A_").adjacent(0, 1));
  CHECK_FALSE(parse_graph6("A?").adjacent(0, 1));

  // "D?{" is K_{1,4} with the center last (vertex 4).
  Graph k14 = parse_graph6("D?{");
  CHECK(k14.order() == 5);
  CHECK(k14.edge_count() == 4);
  CHECK(k14.degree(4) == 4);

  CHECK(emit_graph6(star_graph(5)) != "");
  CHECK(parse_graph6(emit_graph6(star_graph(5))).degree(0) == 4);
  CHECK(emit_graph6(path_graph(1)) == "@");
  CHECK(emit_graph6(Graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 error reporting") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);      // missing bit bytes
  CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError);  // byte below 63
  try {
    parse_graph6("A\x1f");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("graph6 roundtrip and independent decoder on the corpus") {
  for (const auto& name : {"connected_le6.g6", "connected_7.g6"}) {
    auto lines = data_lines(name);
    CHECK(!lines.empty());
    for (const auto& line : lines) {
      Graph g = parse_graph6(line);
      CHECK(emit_graph6(g) == line);
      CHECK(same_adjacency(g, oracle::parse_g6(line)));
      CHECK(g.is_connected());
    }
  }
}

TEST_CASE("graph6 roundtrip on random graphs incl. the long-form header") {
  SplitMix64 seeds(2026);
  for (int n : {1, 2, 13, 61, 62, 63, 64, 100, 128}) {
    Graph g = gnp_graph(n, Rat(2, 5), seeds.next());
    std::string s = emit_graph6(g);
    if (n >= 63) CHECK(s[0] == '~');
    Graph back = parse_graph6(s);
    CHECK(back.order() == n);
    CHECK(emit_graph6(back) == s);
    if (n <= 32) CHECK(same_adjacency(back, oracle::parse_g6(s)));
  }
  CHECK_THROWS_AS(gnp_graph(129, Rat(1, 2), 1), LimitError);
  CHECK_THROWS_AS(parse_graph6("~??}"), ParseError);  // long form under 63
}

TEST_CASE("claw-free and p4-free recognition vs oracle") {
  CHECK(is_claw_free(cycle_graph(6)));
  CHECK_FALSE(is_claw_free(star_graph(4)));
  CHECK(is_p4_free(complete_graph(4)));
  CHECK_FALSE(is_p4_free(path_graph(4)));
  CHECK(is_p4_free(star_graph(7)));  // stars have no induced P4
  CHECK_FALSE(is_claw_free(star_graph(7)));

  for (const auto& line : data_lines("connected_le6.g6")) {
    Graph g = parse_graph6(line);
    oracle::AdjGraph o = oracle::parse_g6(line);
    CHECK(is_claw_free(g) == oracle::claw_free(o));
    CHECK(is_p4_free(g) == oracle::p4_free(o));
  }
}
