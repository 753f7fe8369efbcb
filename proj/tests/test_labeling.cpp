#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "boxdom/decomposition.hpp"
#include "boxdom/error.hpp"
#include "boxdom/families.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/labeling.hpp"
#include "boxdom/product.hpp"
#include "boxdom/rng.hpp"
#include "boxdom/solver.hpp"
#include "oracles.hpp"

using namespace boxdom;

namespace {

// The labeling keeps pointers into the product and decomposition, so the
// pipeline owns them at stable heap addresses.
struct Pipeline {
  std::unique_ptr<Graph> g, h;
  std::unique_ptr<ProductGraph> prod;
  std::unique_ptr<CellDecomposition> dec;
  Labeling lab;
};

// Build the full pipeline over an explicit basis and dominating set.
Pipeline run(const Graph& g, const Graph& h, const std::vector<int>& basis,
             const std::vector<std::pair<int, int>>& d_pairs,
             LabelingOptions opt = {}) {
  Pipeline p;
  p.g = std::make_unique<Graph>(g);
  p.h = std::make_unique<Graph>(h);
  p.prod = std::make_unique<ProductGraph>(*p.g, *p.h);
  p.dec = std::make_unique<CellDecomposition>(decompose(*p.g, basis));
  VertexSet d(p.prod->base().order());
  for (auto [gv, hv] : d_pairs) d.set(p.prod->index(gv, hv));
  p.lab = make_labeling(*p.prod, *p.dec, d, int(d_pairs.size()));
  run_labelings(p.lab, opt);
  return p;
}

IndexSet label_at(const Pipeline& p, int gv, int hv) {
  return p.lab.label[size_t(p.prod->index(gv, hv))];
}

std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(std::string(BOXDOM_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// Everything the theorem promises of a finished labeling, in one place.
void check_full_contract(const Labeling& lab, int gamma_g, int gamma_h,
                         int pi_g) {
  CHECK(lab.last_stage == 3);
  CHECK(verify_faithful(lab));
  CHECK(verify_dominion(lab));
  CHECK(verify_nonempty(lab));
  CHECK(verify_disjointness(lab) == lab.conflicts.empty());
  CHECK(max_label_size(lab) <= pi_g);
  // Monotone refinement across stages.
  for (int v = 0; v < lab.prod->base().order(); ++v) {
    CHECK(iset::is_subset(lab.after2[size_t(v)], lab.after1[size_t(v)]));
    CHECK(iset::is_subset(lab.after3[size_t(v)], lab.after2[size_t(v)]));
    CHECK(lab.label[size_t(v)] == lab.after3[size_t(v)]);
  }
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    FiberAnalysis a = analyze_fiber(lab, h);
    CHECK(a.claim1);
    CHECK(verify_claim1(lab, h) == a.claim1);
    CHECK(a.claim2);
    if (a.e_size) CHECK(*a.e_size >= 0);
  }
  CHECK(verify_projection_all(lab));
  LabelHistogram hist = histogram(lab);
  CHECK(hist.d_total == lab.d.count());
  long total = 0;
  for (long c : hist.f) total += c;
  CHECK(total == hist.d_total);
  CHECK(hist.sum_di() == hist.weighted_f());
  Eq3Report eq3 = verify_eq3(hist, gamma_g, gamma_h, pi_g);
  CHECK(eq3.all());
}

}  // namespace

TEST_CASE("make_labeling contracts") {
  Graph g = cycle_graph(4), h = path_graph(2);
  ProductGraph pr(g, h);
  CellDecomposition dec = decompose(g, {0, 1});

  VertexSet too_big(8);
  too_big.set(pr.index(0, 0));
  too_big.set(pr.index(2, 1));
  too_big.set(pr.index(1, 0));
  CHECK(is_dominating(pr.base(), too_big));
  CHECK_THROWS_AS(make_labeling(pr, dec, too_big, 2), ContractError);

  VertexSet not_dom(8);
  not_dom.set(pr.index(0, 0));
  not_dom.set(pr.index(1, 0));
  CHECK_THROWS_AS(make_labeling(pr, dec, not_dom, 2), ContractError);

  Graph p3 = path_graph(3);
  CellDecomposition wrong = decompose(p3, {1});
  VertexSet d(8);
  d.set(pr.index(0, 0));
  d.set(pr.index(2, 1));
  CHECK_THROWS_AS(make_labeling(pr, wrong, d, 2), ContractError);
}

TEST_CASE("cube pipeline over the power witness basis") {
  // D = {(0,0),(2,1)}; (0,0) carries basis vertex 0 and keeps index 0 by
  // dominion, the external singleton {1} strips 1 from it.
  Pipeline p = run(cycle_graph(4), path_graph(2), {0, 1},
                   {{0, 0}, {2, 1}});
  CHECK(p.lab.after1[size_t(p.prod->index(0, 0))] == iset::from({0, 1}));
  CHECK(p.lab.after1[size_t(p.prod->index(2, 1))] == iset::single(1));
  CHECK(label_at(p, 0, 0) == iset::single(0));
  CHECK(label_at(p, 2, 1) == iset::single(1));
  CHECK(p.lab.passes == 2);
  CHECK(p.lab.conflicts.empty());
  CHECK(p.lab.protected_of(p.prod->index(0, 0)) == iset::single(0));
  CHECK(p.lab.protected_of(p.prod->index(2, 1)) == iset::empty);
  check_full_contract(p.lab, 2, 1, 2);
}

TEST_CASE("cube pipeline over the diagonal basis: external rule 1") {
  // Both members are shared carriers labeled {0,1}; rule 1 removes the lex
  // pair (0,1): the lex-first label (lower id on the tie) loses 0.
  Pipeline p = run(cycle_graph(4), path_graph(2), {0, 2},
                   {{1, 0}, {3, 1}});
  CHECK(p.lab.after1[size_t(p.prod->index(1, 0))] == iset::from({0, 1}));
  CHECK(p.lab.after1[size_t(p.prod->index(3, 1))] == iset::from({0, 1}));
  CHECK(label_at(p, 1, 0) == iset::single(1));
  CHECK(label_at(p, 3, 1) == iset::single(0));
  check_full_contract(p.lab, 2, 1, 2);
}

TEST_CASE("single-fiber internal rule 1") {
  Pipeline p = run(cycle_graph(4), path_graph(1), {0, 2},
                   {{1, 0}, {3, 0}});
  CHECK(p.lab.fibers[0].undominated == iset::from({0, 1}));
  CHECK(p.lab.after1[size_t(p.prod->index(1, 0))] == iset::from({0, 1}));
  CHECK(label_at(p, 1, 0) == iset::single(1));
  CHECK(label_at(p, 3, 0) == iset::single(0));
  check_full_contract(p.lab, 2, 1, 2);
}

TEST_CASE("stage 1 restricts a shared class to the undominated cells") {
  // (1,0) is a shared carrier with class {0,1}; cell 0 holds (0,0) in D, so
  // the restriction to undominated cells is {1}. Two singletons then rest.
  Pipeline p = run(cycle_graph(4), path_graph(1), {0, 2},
                   {{0, 0}, {1, 0}});
  CHECK(p.lab.fibers[0].undominated == iset::single(1));
  CHECK(p.lab.after1[size_t(p.prod->index(0, 0))] == iset::single(0));
  CHECK(p.lab.after1[size_t(p.prod->index(1, 0))] == iset::single(1));
  CHECK(label_at(p, 0, 0) == iset::single(0));
  CHECK(label_at(p, 1, 0) == iset::single(1));
  CHECK(p.lab.passes == 1);  // nothing to alter
  check_full_contract(p.lab, 2, 1, 2);
}

TEST_CASE("equal singletons are left alone") {
  // P3 box K2, lex-least D = {(0,0),(2,1)}, basis {1}: every label is {0};
  // the two-singleton rule leaves both, and that is not a conflict.
  Pipeline p = run(path_graph(3), path_graph(2), {1}, {{0, 0}, {2, 1}});
  CHECK(label_at(p, 0, 0) == iset::single(0));
  CHECK(label_at(p, 2, 1) == iset::single(0));
  CHECK(p.lab.conflicts.empty());
  CHECK(verify_disjointness(p.lab));  // singleton pairs are permitted
  check_full_contract(p.lab, 1, 1, 1);
}

TEST_CASE("smallest product") {
  Pipeline p = run(path_graph(1), path_graph(2), {0}, {{0, 0}});
  CHECK(label_at(p, 0, 0) == iset::single(0));
  CHECK(p.lab.rows.size() == 2);
  CHECK(p.lab.rows[0] == std::vector<int>{0});
  CHECK(p.lab.rows[1].empty());
  check_full_contract(p.lab, 1, 1, 1);
}

TEST_CASE("external rule 2 strips the shared index from the bigger label") {
  // C4 box P3 with D = {(0,0),(2,1),(0,2)}: the basis carriers start at
  // {0,1} and lose 1 to the private singleton {1} in the middle fiber.
  Pipeline p = run(cycle_graph(4), path_graph(3), {0, 1},
                   {{0, 0}, {2, 1}, {0, 2}});
  CHECK(p.lab.after1[size_t(p.prod->index(0, 0))] == iset::from({0, 1}));
  CHECK(p.lab.after1[size_t(p.prod->index(2, 1))] == iset::single(1));
  CHECK(label_at(p, 0, 0) == iset::single(0));
  CHECK(label_at(p, 2, 1) == iset::single(1));
  CHECK(label_at(p, 0, 2) == iset::single(0));
  check_full_contract(p.lab, 2, 1, 2);
}

TEST_CASE("seeded-random policy explores but stays within the contract") {
  Graph g = cycle_graph(4), h = path_graph(2);
  for (uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
    LabelingOptions opt;
    opt.policy = Policy::seeded_random;
    opt.seed = seed;
    Pipeline p = run(g, h, {0, 2}, {{1, 0}, {3, 1}}, opt);
    // Rule 1 on {0,1} vs {0,1} has two valid removal pairs; either way the
    // result is two complementary singletons.
    IndexSet a = label_at(p, 1, 0), b = label_at(p, 3, 1);
    CHECK(iset::count(a) == 1);
    CHECK(iset::count(b) == 1);
    CHECK((a | b) == iset::from({0, 1}));
    check_full_contract(p.lab, 2, 1, 2);
  }
}

TEST_CASE("seeded-random policy is reproducible for a fixed seed") {
  LabelingOptions opt;
  opt.policy = Policy::seeded_random;
  opt.seed = 12345;
  Pipeline a = run(cycle_graph(4), path_graph(2), {0, 2}, {{1, 0}, {3, 1}},
                   opt);
  Pipeline b = run(cycle_graph(4), path_graph(2), {0, 2}, {{1, 0}, {3, 1}},
                   opt);
  CHECK(a.lab.label == b.lab.label);
  CHECK(a.lab.passes == b.lab.passes);
}

TEST_CASE("policy parsing") {
  CHECK(parse_policy("deterministic") == Policy::deterministic);
  CHECK(parse_policy("seeded-random") == Policy::seeded_random);
  CHECK(parse_policy("seeded_random") == Policy::seeded_random);
  CHECK_THROWS_AS(parse_policy("coin-flip"), ArgumentError);
  CHECK(std::string(policy_name(Policy::deterministic)) == "deterministic");
  CHECK(std::string(policy_name(Policy::seeded_random)) == "seeded-random");
}

TEST_CASE("min_set_cover matches the exhaustive oracle") {
  SplitMix64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng.below(8));
    int m = 1 + int(rng.below(6));
    std::vector<VertexSet> sets;
    std::vector<std::uint32_t> masks;
    for (int i = 0; i < m; ++i) {
      std::uint32_t mask = std::uint32_t(rng.below(1u << n));
      masks.push_back(mask);
      VertexSet s(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.set(v);
      sets.push_back(s);
    }
    std::uint32_t univ_mask = std::uint32_t(rng.below(1u << n));
    VertexSet universe(n);
    for (int v = 0; v < n; ++v)
      if (univ_mask >> v & 1) universe.set(v);

    auto got = min_set_cover(universe, sets);
    int expect = oracle::min_cover_size(univ_mask, masks);
    if (expect < 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(int(got->size()) == expect);
      VertexSet covered(n);
      for (int idx : *got) {
        CHECK(idx >= 0);
        CHECK(idx < m);
        covered = covered | sets[size_t(idx)];
      }
      CHECK((universe - covered).empty());
    }
  }
  CHECK(min_set_cover(VertexSet(5), {}).has_value());  // empty needs nothing
  CHECK(min_set_cover(VertexSet(5), {})->empty());
  CHECK_FALSE(min_set_cover(VertexSet::of(3, {0}), {VertexSet::of(3, {1})})
                  .has_value());
}

TEST_CASE("full contract across the small corpus") {
  for (const auto& line : data_lines("connected_le4.g6")) {
    Graph g = parse_graph6(line);
    PowerReport rep = power_report(g);
    for (const Graph& h :
         {path_graph(2), path_graph(3), cycle_graph(4)}) {
      ProductGraph pr(g, h);
      VertexSet d = min_dominating_set(pr.base());
      CellDecomposition dec = decompose(g, rep.witness_set.to_vector());
      int gamma_h = domination_number(h);

      for (Policy policy : {Policy::deterministic, Policy::seeded_random}) {
        LabelingOptions opt;
        opt.policy = policy;
        opt.seed = 7;
        Labeling lab = make_labeling(pr, dec, d, d.count());
        run_labelings(lab, opt);
        CHECK(lab.conflicts.empty());
        check_full_contract(lab, rep.gamma, gamma_h, rep.power_closed);
      }
    }
  }
}

TEST_CASE("trace json is well formed and complete") {
  Pipeline p = run(cycle_graph(4), path_graph(2), {0, 1}, {{0, 0}, {2, 1}});
  std::string text = trace_json(p.lab, Policy::deterministic, 0, 1, 2);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["g_graph6"] == "Cl");
  CHECK(j["h_graph6"] == "A_");
  CHECK(j["gamma_g"] == 2);
  CHECK(j["gamma_h"] == 1);
  CHECK(j["pi_g"] == 2);
  CHECK(j["gamma_product"] == 2);
  CHECK(j["policy"] == "deterministic");
  CHECK(j["basis"] == nlohmann::json::array({0, 1}));
  CHECK(j["cells"]["Q0"] == nlohmann::json::array({0, 3}));
  CHECK(j["cells"]["Q1"] == nlohmann::json::array({1, 2}));
  CHECK(j["shared"].empty());
  CHECK(j["d"].size() == 2);
  CHECK(j["fibers"].size() == 2);
  CHECK(j["rows"].size() == 2);
  // Per-stage labels for the carrier of basis vertex 0: {0,1} after the
  // cover stage, {0} after alteration, {0} after the fallback stage.
  nlohmann::json stages = nlohmann::json::array(
      {nlohmann::json::array({0, 1}), nlohmann::json::array({0}),
       nlohmann::json::array({0})});
  CHECK(j["rows"]["0"][0]["stage_labels"] == stages);
  CHECK(j["rows"]["0"][0]["g_vertex"] == 0);
  CHECK(j["rows"]["0"][0]["cell_or_class"] == "Q0");
  CHECK(j["conflicts"].empty());
  CHECK(j["analysis"].size() == 2);
  CHECK(j["analysis"][0]["claim1"] == true);
  CHECK(j["analysis"][0]["claim2"] == true);
  CHECK(j["projections_dominate"] == nlohmann::json::array({true, true}));
  // f is indexed by label size 1..pi: two singleton labels, no pairs.
  CHECK(j["histogram"]["f"] == nlohmann::json::array({2, 0}));
  CHECK(j["histogram"]["d_sizes"] == nlohmann::json::array({1, 1}));
  CHECK(j["histogram"]["max_label_size"] == 1);
  CHECK(j["eq3"]["count_lb"] == true);
  CHECK(j["eq3"]["profile_feasible"] == true);
  CHECK(text.back() == '\n');

  CHECK_THROWS_AS(
      [&] {
        Labeling fresh = make_labeling(*p.prod, *p.dec, p.lab.d, 2);
        return trace_json(fresh, Policy::deterministic, 0, 1, 2);
      }(),
      ContractError);
}

TEST_CASE("dominion deadlock on one basis is certified on another") {
  // Two six-vertex graphs whose lexicographically least minimum-allegiance
  // basis jams the internal alteration: in one fiber the only applicable
  // rule must remove a basis carrier's protected element, so a conflict is
  // recorded and the fiber accounting fails. A later minimum-allegiance
  // basis resolves cleanly, and certify() finds it.
  Graph h4 = cycle_graph(4);
  REQUIRE(domination_number(h4) == 2);
  for (const char* g6 : {"EC\\o", "E_lw"}) {
    CAPTURE(g6);
    Graph g = parse_graph6(g6);
    PowerReport pr = power_report(g);
    ProductGraph prod(g, h4);
    int gp = domination_number(prod.base());
    DominatingSet d = min_dominating_set(prod.base());

    CellDecomposition dec = decompose(g, pr.witness_set.to_vector());
    Labeling lab = make_labeling(prod, dec, d, gp);
    run_labelings(lab, LabelingOptions{});
    CHECK(!lab.conflicts.empty());
    bool all_claim2 = true;
    for (int hv = 0; hv < prod.h_size(); ++hv) {
      FiberAnalysis a = analyze_fiber(lab, hv);
      CHECK(a.claim1);
      all_claim2 = all_claim2 && a.claim2;
    }
    CHECK(!all_claim2);

    Certificate cert =
        certify(prod, d, gp, 2, pr.power_closed, LabelingOptions{});
    CHECK(cert.clean());
    CHECK(cert.bases_tried > 1);
    CHECK(cert.basis != pr.witness_set.to_vector());
    CHECK(cert.lab.conflicts.empty());
    CHECK(cert.hist.max_size <= pr.power_closed);
    std::vector<int> expected =
        std::string(g6) == "EC\\o" ? std::vector<int>{3, 5}
                                   : std::vector<int>{0, 5};
    CHECK(cert.basis == expected);
  }
}

TEST_CASE("certify keeps the least basis when it is already clean") {
  Graph c4 = cycle_graph(4);
  Graph k2 = path_graph(2);
  PowerReport pr = power_report(c4);
  ProductGraph prod(c4, k2);
  int gp = domination_number(prod.base());
  DominatingSet d = min_dominating_set(prod.base());
  Certificate cert =
      certify(prod, d, gp, 1, pr.power_closed, LabelingOptions{});
  CHECK(cert.clean());
  CHECK(cert.bases_tried == 1);
  CHECK(cert.basis == pr.witness_set.to_vector());
  CHECK(cert.claim1);
  CHECK(cert.claim2);
  CHECK(cert.projection_all);
  CHECK(cert.eq3.all());
}
