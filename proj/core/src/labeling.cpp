#include "boxdom/labeling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include <json.hpp>

#include "boxdom/error.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/solver.hpp"

namespace boxdom {

const char* policy_name(Policy p) {
  return p == Policy::deterministic ? "deterministic" : "seeded-random";
}

Policy parse_policy(const std::string& s) {
  if (s == "deterministic") return Policy::deterministic;
  if (s == "seeded-random" || s == "seeded_random") return Policy::seeded_random;
  throw ArgumentError("unknown policy '" + s +
                      "' (expected deterministic or seeded-random)");
}

IndexSet Labeling::protected_of(int v) const {
  int pos = dec->position_of[g_of(v)];
  return pos >= 0 ? iset::single(pos) : iset::empty;
}

Labeling make_labeling(const ProductGraph& prod, const CellDecomposition& dec,
                       const DominatingSet& d, int gamma_product) {
  if (dec.graph->order() != prod.g_size())
    throw ContractError("decomposition is not over the product's first factor");
  if (d.count() != gamma_product)
    throw ContractError("labeling requires a minimum dominating set: |D| = " +
                        std::to_string(d.count()) + ", gamma = " +
                        std::to_string(gamma_product));
  Labeling lab;
  lab.prod = &prod;
  lab.dec = &dec;
  lab.fibers = fiber_views(prod, dec, d);  // also checks d dominates
  lab.d = d;
  int n = prod.base().order();
  lab.label.assign(size_t(n), iset::empty);
  lab.rows.assign(size_t(prod.h_size()), {});
  d.for_each([&](int v) { lab.rows[size_t(prod.coord(v).second)].push_back(v); });
  // Fiber ids grow with g, so each row is already ascending in g.
  return lab;
}

void labeling1(Labeling& lab) {
  const CellDecomposition& dec = *lab.dec;
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    IndexSet ih = lab.fibers[size_t(h)].undominated;
    for (int v : lab.rows[size_t(h)]) {
      int g = lab.g_of(v);
      if (!dec.is_shared(g)) {
        // Cell member (basis or private): the closed basis cover.
        lab.label[v] = dec.basis_closed[size_t(g)];
      } else {
        // Shared carrier: restrict the class to the undominated part I^h
        // when possible; a class entirely inside the dominated part keeps
        // its full label for Labeling 3 to shrink.
        IndexSet s = dec.basis_open[size_t(g)];
        IndexSet r = s & ih;
        lab.label[v] = r ? r : s;
      }
    }
  }
  lab.after1 = lab.label;
  lab.last_stage = 1;
}

namespace {

// True when a's label is the "lexicographically first" of the pair; ties
// broken by carrier id, which is (h, g) order.
bool lex_first(const Labeling& lab, int a, int b) {
  IndexSet s = lab.label[size_t(a)], t = lab.label[size_t(b)];
  if (iset::lex_less(s, t)) return true;
  if (iset::lex_less(t, s)) return false;
  return a < b;
}

struct PairOutcome {
  bool changed = false;
  const char* stuck = nullptr;  // rule that fired but had no legal removal
};

// One visit of the alteration ladder for the labels carried by product
// vertices a and b. Rule 1 repeats in place per the paper; the singleton
// and single-overlap rules fire once and leave the pair settled. In audit
// mode nothing mutates: a blocked rule is reported, and an actionable rule
// means the caller's fixpoint claim was wrong.
PairOutcome process_pair(Labeling& lab, int a, int b, Policy policy,
                         SplitMix64& rng, bool audit) {
  PairOutcome out;
  for (;;) {
    IndexSet s = lab.label[size_t(a)], t = lab.label[size_t(b)];
    IndexSet common = s & t;
    int nc = iset::count(common);
    if (nc == 0) return out;

    if (nc > 1) {
      // Rule 1: drop one common element from each side, distinct elements,
      // dominion-protected elements excluded.
      int va = a, vb = b;
      if (!lex_first(lab, a, b)) std::swap(va, vb);
      IndexSet ea = common & ~lab.protected_of(va);
      IndexSet eb = common & ~lab.protected_of(vb);
      std::vector<std::pair<int, int>> picks;
      iset::for_each(ea, [&](int x) {
        iset::for_each(eb, [&](int y) {
          if (x != y) picks.emplace_back(x, y);
        });
      });
      if (picks.empty()) {
        out.stuck = "rule1";
        return out;
      }
      if (audit) throw ContractError("actionable rule 1 at claimed fixpoint");
      auto [x, y] = policy == Policy::deterministic
                        ? picks.front()
                        : picks[size_t(rng.below(picks.size()))];
      lab.label[size_t(va)] = iset::without(lab.label[size_t(va)], x);
      lab.label[size_t(vb)] = iset::without(lab.label[size_t(vb)], y);
      out.changed = true;
      continue;
    }

    // Exactly one common element.
    int c = iset::lowest(common);
    int sa = iset::count(s), sb = iset::count(t);
    if (sa == 1 && sb == 1) return out;  // two singletons stay as they are

    if (sa == 1 || sb == 1) {
      // Singleton meets a bigger label: shrink the bigger side.
      int big = sa == 1 ? b : a;
      if (iset::test(lab.protected_of(big), c)) {
        out.stuck = "rule2";
        return out;
      }
      if (audit) throw ContractError("actionable rule 2 at claimed fixpoint");
      lab.label[size_t(big)] = iset::without(lab.label[size_t(big)], c);
      out.changed = true;
      return out;
    }

    // Both bigger than 1, sharing exactly one element: drop it from one
    // side, preferring the lexicographically-first label when legal.
    bool a_ok = !iset::test(lab.protected_of(a), c);
    bool b_ok = !iset::test(lab.protected_of(b), c);
    if (!a_ok && !b_ok) {
      out.stuck = "rule4";
      return out;
    }
    if (audit) throw ContractError("actionable rule 4 at claimed fixpoint");
    int va = a, vb = b;
    bool va_ok = a_ok, vb_ok = b_ok;
    if (!lex_first(lab, a, b)) {
      std::swap(va, vb);
      std::swap(va_ok, vb_ok);
    }
    int chosen;
    if (policy == Policy::deterministic)
      chosen = va_ok ? va : vb;
    else if (va_ok && vb_ok)
      chosen = rng.below(2) == 0 ? va : vb;
    else
      chosen = va_ok ? va : vb;
    lab.label[size_t(chosen)] = iset::without(lab.label[size_t(chosen)], c);
    out.changed = true;
    return out;
  }
}

}  // namespace

void labeling2(Labeling& lab, const LabelingOptions& opt, SplitMix64& rng) {
  const Graph& hg = lab.prod->h();
  long k = lab.dec->k();
  long dsz = lab.d.count();
  long guard =
      opt.max_passes > 0 ? opt.max_passes : std::max<long>(dsz * k, 64);

  auto internal_row = [&](int h, bool audit) {
    bool any = false;
    const std::vector<int>& row = lab.rows[size_t(h)];
    for (size_t i = 0; i < row.size(); ++i)
      for (size_t j = i + 1; j < row.size(); ++j) {
        PairOutcome o =
            process_pair(lab, row[i], row[j], opt.policy, rng, audit);
        any |= o.changed;
        if (audit && o.stuck)
          lab.conflicts.push_back({row[i], row[j], o.stuck});
      }
    return any;
  };
  // Ordered pairs (S in row h, T in row hn) for each neighbor hn of h.
  auto external_row = [&](int h, int hn, bool audit) {
    bool any = false;
    for (int va : lab.rows[size_t(h)])
      for (int vb : lab.rows[size_t(hn)]) {
        PairOutcome o = process_pair(lab, va, vb, opt.policy, rng, audit);
        any |= o.changed;
        if (audit && o.stuck) lab.conflicts.push_back({va, vb, o.stuck});
      }
    return any;
  };

  long pass = 0;
  for (;;) {
    bool any = false;
    for (int h = 0; h < lab.prod->h_size(); ++h) {
      long inner = 0;
      while (internal_row(h, false)) {
        any = true;
        if (++inner > guard)
          throw ContractError("internal alteration did not stabilize");
      }
    }
    for (int h = 0; h < lab.prod->h_size(); ++h)
      hg.neighbors(h).for_each(
          [&](int hn) { any |= external_row(h, hn, false); });
    ++pass;
    if (!any) break;
    if (pass > guard)
      throw ContractError("alteration sweeps exceeded the fixpoint guard");
  }
  lab.passes = int(pass);

  // Audit at the fixpoint: every rule that still matches is necessarily
  // dominion-blocked; record each such pair once.
  lab.conflicts.clear();
  for (int h = 0; h < lab.prod->h_size(); ++h) internal_row(h, true);
  for (int h = 0; h < lab.prod->h_size(); ++h)
    hg.neighbors(h).for_each([&](int hn) {
      if (h < hn) external_row(h, hn, true);
    });

  lab.after2 = lab.label;
  lab.last_stage = 2;
}

void labeling3(Labeling& lab, const LabelingOptions& opt, SplitMix64& rng) {
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    IndexSet i1 =
        iset::full(lab.dec->k()) & ~lab.fibers[size_t(h)].undominated;
    for (int v : lab.rows[size_t(h)]) {
      int g = lab.g_of(v);
      if (!lab.dec->is_shared(g)) continue;
      if (!iset::is_subset(lab.dec->basis_open[size_t(g)], i1)) continue;
      IndexSet cur = lab.label[size_t(v)];
      if (iset::count(cur) <= 1) continue;  // no choice to make
      int pick;
      if (opt.policy == Policy::deterministic) {
        pick = iset::lowest(cur);
      } else {
        std::vector<int> elems = iset::to_vector(cur);
        pick = elems[size_t(rng.below(elems.size()))];
      }
      lab.label[size_t(v)] = iset::single(pick);
    }
  }
  lab.after3 = lab.label;
  lab.last_stage = 3;
}

namespace {

void assert_stage(const Labeling& lab, const char* stage,
                  const std::vector<IndexSet>* prev) {
  if (!verify_nonempty(lab))
    throw ContractError(std::string(stage) + ": a label became empty");
  if (!verify_faithful(lab))
    throw ContractError(std::string(stage) + ": faithfulness violated");
  if (!verify_dominion(lab))
    throw ContractError(std::string(stage) + ": dominion violated");
  if (prev) {
    bool shrunk = true;
    lab.d.for_each([&](int v) {
      shrunk = shrunk &&
               iset::is_subset(lab.label[size_t(v)], (*prev)[size_t(v)]);
    });
    if (!shrunk)
      throw ContractError(std::string(stage) + ": a label grew");
  }
}

}  // namespace

void run_labelings(Labeling& lab, const LabelingOptions& opt) {
  SplitMix64 rng(opt.seed);
  labeling1(lab);
  assert_stage(lab, "labeling 1", nullptr);
  labeling2(lab, opt, rng);
  assert_stage(lab, "labeling 2", &lab.after1);
  labeling3(lab, opt, rng);
  assert_stage(lab, "labeling 3", &lab.after2);
}

bool verify_faithful(const Labeling& lab) {
  bool ok = true;
  lab.d.for_each([&](int v) {
    IndexSet allowed = lab.dec->basis_closed[size_t(lab.g_of(v))];
    ok = ok && iset::is_subset(lab.label[size_t(v)], allowed);
  });
  return ok;
}

bool verify_dominion(const Labeling& lab) {
  bool ok = true;
  lab.d.for_each([&](int v) {
    int pos = lab.dec->position_of[size_t(lab.g_of(v))];
    if (pos >= 0) ok = ok && iset::test(lab.label[size_t(v)], pos);
  });
  return ok;
}

bool verify_nonempty(const Labeling& lab) {
  bool ok = true;
  lab.d.for_each([&](int v) { ok = ok && lab.label[size_t(v)] != 0; });
  return ok;
}

namespace {

bool pair_ok(IndexSet s, IndexSet t) {
  return (s & t) == 0 || (iset::count(s) == 1 && iset::count(t) == 1);
}

}  // namespace

bool verify_disjointness(const Labeling& lab) {
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    const std::vector<int>& row = lab.rows[size_t(h)];
    for (size_t i = 0; i < row.size(); ++i)
      for (size_t j = i + 1; j < row.size(); ++j)
        if (!pair_ok(lab.label[size_t(row[i])], lab.label[size_t(row[j])]))
          return false;
    bool ok = true;
    lab.prod->h().neighbors(h).for_each([&](int hn) {
      if (hn < h) return;  // each H-edge once
      for (int va : row)
        for (int vb : lab.rows[size_t(hn)])
          ok = ok && pair_ok(lab.label[size_t(va)], lab.label[size_t(vb)]);
    });
    if (!ok) return false;
  }
  return true;
}

int max_label_size(const Labeling& lab) {
  int best = 0;
  lab.d.for_each(
      [&](int v) { best = std::max(best, iset::count(lab.label[size_t(v)])); });
  return best;
}

namespace {

constexpr int kCoverInf = 1 << 20;

struct CoverSearch {
  const std::vector<VertexSet>* sets;
  std::map<std::array<uint64_t, 2>, int> memo;

  int solve(const VertexSet& remaining) {
    if (remaining.empty()) return 0;
    std::array<uint64_t, 2> key = {remaining.word(0), remaining.word(1)};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int x = pivot(remaining);
    int best = kCoverInf;
    for (size_t i = 0; i < sets->size(); ++i) {
      if (!(*sets)[i].test(x)) continue;
      int sub = solve(remaining - (*sets)[i]);
      if (sub < kCoverInf) best = std::min(best, 1 + sub);
    }
    memo.emplace(key, best);
    return best;
  }

  // Uncovered element with the fewest covering sets, lowest id on ties:
  // standard branching pivot, also deterministic for reconstruction.
  int pivot(const VertexSet& remaining) const {
    int best = -1, best_cnt = kCoverInf;
    remaining.for_each([&](int x) {
      int cnt = 0;
      for (const VertexSet& s : *sets) cnt += s.test(x) ? 1 : 0;
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best = x;
      }
    });
    return best;
  }
};

}  // namespace

std::optional<std::vector<int>> min_set_cover(
    const VertexSet& universe, const std::vector<VertexSet>& sets) {
  CoverSearch search{&sets, {}};
  int best = search.solve(universe);
  if (best >= kCoverInf) return std::nullopt;
  // Replay the decisions to extract one optimal cover: at each step take
  // the first candidate whose subproblem confirms the optimum.
  std::vector<int> chosen;
  VertexSet remaining = universe;
  while (!remaining.empty()) {
    int x = search.pivot(remaining);
    int need = search.solve(remaining);
    for (size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].test(x)) continue;
      VertexSet next = remaining - sets[i];
      if (1 + search.solve(next) == need) {
        chosen.push_back(int(i));
        remaining = next;
        break;
      }
    }
  }
  return chosen;
}

bool verify_claim1(const Labeling& lab, int h) {
  return analyze_fiber(lab, h).claim1;
}

bool verify_claim2(const FiberAnalysis& a) { return a.claim2; }

FiberAnalysis analyze_fiber(const Labeling& lab, int h) {
  if (h < 0 || h >= lab.prod->h_size())
    throw ArgumentError("analyze_fiber: no such fiber");
  if (lab.last_stage != 3)
    throw ContractError("analyze_fiber requires all three labelings");
  const Graph& g = lab.prod->g();
  FiberAnalysis a;
  a.h = h;
  for (int v : lab.rows[size_t(h)]) {
    int size = iset::count(lab.label[size_t(v)]);
    if (size > 1) {
      a.s1.push_back(v);
      a.m.push_back(size);
      a.j1 |= lab.label[size_t(v)];
    }
  }
  a.chamber_j1 = chamber(*lab.dec, a.j1);
  const VertexSet& dh = lab.fibers[size_t(h)].d_h;

  a.claim1 = true;
  a.chamber_j1.for_each([&](int x) {
    a.claim1 = a.claim1 && g.closed_neighbors(x).intersects(dh);
  });

  // E: fewest vertices of D^h outside the chamber that, with the chamber's
  // own D-vertices, dominate the chamber inside the fiber.
  VertexSet inside = dh & a.chamber_j1;
  VertexSet d1 = dh - a.chamber_j1;
  VertexSet need(g.order());
  a.chamber_j1.for_each([&](int x) {
    if (!g.closed_neighbors(x).intersects(inside)) need.set(x);
  });
  std::vector<int> cand = d1.to_vector();
  std::vector<VertexSet> covers;
  covers.reserve(cand.size());
  for (int u : cand) covers.push_back(g.closed_neighbors(u) & a.chamber_j1);
  std::optional<std::vector<int>> cover = min_set_cover(need, covers);
  if (cover) {
    a.e_size = int(cover->size());
    for (int idx : *cover)
      a.e_set.push_back(lab.prod->index(cand[size_t(idx)], h));
  }

  long deficit = 0;
  for (int mi : a.m) deficit += mi - 1;
  a.claim2 = a.claim1 && a.e_size && long(*a.e_size) >= deficit;
  return a;
}

bool verify_projection(const Labeling& lab, int i) {
  if (i < 0 || i >= lab.dec->k())
    throw ArgumentError("verify_projection: basis index out of range");
  const Graph& hg = lab.prod->h();
  VertexSet proj(hg.order());
  for (int h = 0; h < hg.order(); ++h)
    for (int v : lab.rows[size_t(h)])
      if (iset::test(lab.label[size_t(v)], i)) {
        proj.set(h);
        break;
      }
  return is_dominating(hg, proj);
}

bool verify_projection_all(const Labeling& lab) {
  for (int i = 0; i < lab.dec->k(); ++i)
    if (!verify_projection(lab, i)) return false;
  return true;
}

long LabelHistogram::sum_di() const {
  long s = 0;
  for (long x : d_sizes) s += x;
  return s;
}

long LabelHistogram::weighted_f() const {
  long s = 0;
  for (size_t c = 0; c < f.size(); ++c) s += long(c + 1) * f[c];
  return s;
}

LabelHistogram histogram(const Labeling& lab) {
  int k = lab.dec->k();
  LabelHistogram hist;
  hist.f.assign(size_t(k), 0);
  hist.d_sizes.assign(size_t(k), 0);
  hist.d_total = lab.d.count();
  lab.d.for_each([&](int v) {
    IndexSet s = lab.label[size_t(v)];
    int size = iset::count(s);
    hist.f[size_t(size - 1)]++;
    hist.max_size = std::max(hist.max_size, size);
    iset::for_each(s, [&](int i) { hist.d_sizes[size_t(i)]++; });
  });
  hist.t.reserve(size_t(k));
  for (long fc : hist.f) hist.t.push_back(Rat(fc, hist.d_total));
  return hist;
}

Eq3Report verify_eq3(const LabelHistogram& hist, int gamma_g, int gamma_h,
                     int pi_g) {
  Eq3Report r;
  r.count_lb = long(gamma_g) * long(gamma_h) <= hist.sum_di();
  r.count_identity = hist.sum_di() == hist.weighted_f();
  r.label_cap = hist.max_size <= pi_g;
  long lhs = hist.f.empty() ? 0 : hist.f[0];
  long rhs = 0;
  for (size_t c = 1; c < hist.f.size(); ++c) rhs += long(c) * hist.f[c];
  r.profile_feasible = lhs >= rhs;
  return r;
}

namespace {

using njson = nlohmann::ordered_json;

njson iset_json(IndexSet s) {
  njson a = njson::array();
  iset::for_each(s, [&](int i) { a.push_back(i); });
  return a;
}

njson vset_json(const VertexSet& s) {
  njson a = njson::array();
  s.for_each([&](int v) { a.push_back(v); });
  return a;
}

njson coord_json(const Labeling& lab, int v) {
  return njson::array({lab.g_of(v), lab.h_of(v)});
}

std::string class_name(const CellDecomposition& dec, int g) {
  if (!dec.is_shared(g))
    return "Q" + std::to_string(iset::lowest(dec.class_of(g)));
  return "P" + iset::to_string(dec.basis_open[size_t(g)]);
}

}  // namespace

std::string trace_json(const Labeling& lab, Policy policy, uint64_t seed,
                       int gamma_h, int pi_g) {
  if (lab.last_stage != 3)
    throw ContractError("trace requires the full pipeline");
  const CellDecomposition& dec = *lab.dec;
  njson j;
  j["schema"] = 1;
  j["g_graph6"] = emit_graph6(lab.prod->g());
  j["h_graph6"] = emit_graph6(lab.prod->h());
  j["gamma_g"] = dec.k();
  j["gamma_h"] = gamma_h;
  j["pi_g"] = pi_g;
  j["gamma_product"] = lab.d.count();
  j["policy"] = policy_name(policy);
  j["seed"] = seed;
  j["basis"] = dec.basis;

  njson cells = njson::object();
  for (int i = 0; i < dec.k(); ++i)
    cells["Q" + std::to_string(i)] = vset_json(dec.cells[size_t(i)]);
  j["cells"] = cells;
  njson shared = njson::object();
  for (const auto& [s, verts] : dec.shared)
    shared["P" + iset::to_string(s)] = vset_json(verts);
  j["shared"] = shared;

  njson dv = njson::array();
  lab.d.for_each([&](int v) { dv.push_back(coord_json(lab, v)); });
  j["d"] = dv;

  njson fibers = njson::array();
  for (const FiberView& f : lab.fibers) {
    njson fj;
    fj["h"] = f.h;
    fj["d_h"] = vset_json(f.d_h);
    fj["undominated_cells"] = iset_json(f.undominated);
    fibers.push_back(fj);
  }
  j["fibers"] = fibers;

  njson rows = njson::object();
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    njson row = njson::array();
    for (int v : lab.rows[size_t(h)]) {
      njson e;
      e["g_vertex"] = lab.g_of(v);
      e["cell_or_class"] = class_name(dec, lab.g_of(v));
      e["stage_labels"] =
          njson::array({iset_json(lab.after1[size_t(v)]),
                        iset_json(lab.after2[size_t(v)]),
                        iset_json(lab.after3[size_t(v)])});
      row.push_back(e);
    }
    rows[std::to_string(h)] = row;
  }
  j["rows"] = rows;

  njson conflicts = njson::array();
  for (const Conflict& c : lab.conflicts) {
    njson cj;
    cj["a"] = coord_json(lab, c.a);
    cj["b"] = coord_json(lab, c.b);
    cj["rule"] = c.rule;
    conflicts.push_back(cj);
  }
  j["conflicts"] = conflicts;

  njson analysis = njson::array();
  for (int h = 0; h < lab.prod->h_size(); ++h) {
    FiberAnalysis a = analyze_fiber(lab, h);
    njson aj;
    aj["h"] = h;
    njson s1 = njson::array();
    for (int v : a.s1) s1.push_back(lab.g_of(v));
    aj["s1_g_vertices"] = s1;
    aj["m"] = a.m;
    aj["j1"] = iset_json(a.j1);
    aj["claim1"] = a.claim1;
    if (a.e_size)
      aj["e_size"] = *a.e_size;
    else
      aj["e_size"] = nullptr;
    aj["claim2"] = a.claim2;
    analysis.push_back(aj);
  }
  j["analysis"] = analysis;

  njson proj = njson::array();
  for (int i = 0; i < dec.k(); ++i) proj.push_back(verify_projection(lab, i));
  j["projections_dominate"] = proj;

  LabelHistogram hist = histogram(lab);
  njson hj;
  hj["f"] = hist.f;
  hj["d_sizes"] = hist.d_sizes;
  hj["max_label_size"] = hist.max_size;
  j["histogram"] = hj;

  Eq3Report eq = verify_eq3(hist, dec.k(), gamma_h, pi_g);
  njson ej;
  ej["count_lb"] = eq.count_lb;
  ej["count_identity"] = eq.count_identity;
  ej["label_cap"] = eq.label_cap;
  ej["profile_feasible"] = eq.profile_feasible;
  j["eq3"] = ej;

  return j.dump(2) + "\n";
}

bool Certificate::clean() const {
  return lab.conflicts.empty() && claim1 && claim2 && projection_all &&
         eq3.all();
}

namespace {

Certificate certify_with_basis(const ProductGraph& prod,
                               const DominatingSet& d, int gamma_product,
                               int gamma_h, int pi_g,
                               const std::vector<int>& basis,
                               const LabelingOptions& opt) {
  Certificate c;
  c.basis = basis;
  c.dec = std::make_unique<CellDecomposition>(decompose(prod.g(), basis));
  c.lab = make_labeling(prod, *c.dec, d, gamma_product);
  run_labelings(c.lab, opt);
  c.analyses.reserve(size_t(prod.h_size()));
  for (int hv = 0; hv < prod.h_size(); ++hv) {
    c.analyses.push_back(analyze_fiber(c.lab, hv));
    c.claim1 = c.claim1 && c.analyses.back().claim1;
    c.claim2 = c.claim2 && c.analyses.back().claim2;
  }
  c.projection_all = verify_projection_all(c.lab);
  c.hist = histogram(c.lab);
  c.eq3 = verify_eq3(c.hist, c.dec->k(), gamma_h, pi_g);
  return c;
}

}  // namespace

Certificate certify(const ProductGraph& prod, const DominatingSet& d,
                    int gamma_product, int gamma_h, int power_closed_g,
                    const LabelingOptions& opt) {
  // A dominion deadlock can jam the refinement for one basis yet leave
  // another minimum-allegiance basis of the same graph conflict-free, so the
  // candidates are scanned in order until one certifies.
  std::vector<std::vector<int>> candidates;
  enumerate_gamma_sets(prod.g(), [&](const VertexSet& s) {
    if (allegiance(prod.g(), s) == power_closed_g)
      candidates.push_back(s.to_vector());
    return true;
  });
  if (candidates.empty())
    throw ContractError("no gamma-set of G attains the given allegiance " +
                        std::to_string(power_closed_g));

  Certificate least;
  for (size_t i = 0; i < candidates.size(); ++i) {
    Certificate c = certify_with_basis(prod, d, gamma_product, gamma_h,
                                       power_closed_g, candidates[i], opt);
    c.bases_tried = int(i) + 1;
    if (c.clean()) return c;
    if (i == 0) least = std::move(c);
  }
  least.bases_tried = int(candidates.size());
  return least;
}

}  // namespace boxdom
