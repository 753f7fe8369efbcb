#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boxdom/bounds.hpp"
#include "boxdom/decomposition.hpp"
#include "boxdom/rng.hpp"
#include "boxdom/solver.hpp"

namespace boxdom {

// Where the alteration rules say "arbitrarily": deterministic picks the
// lexicographically least legal choice, seeded_random draws uniformly among
// the legal choices. Scheduling is identical under both.
enum class Policy { deterministic, seeded_random };

const char* policy_name(Policy p);
Policy parse_policy(const std::string& s);

struct LabelingOptions {
  Policy policy = Policy::deterministic;
  uint64_t seed = 0;
  // Fixpoint guard for the alteration sweeps; 0 means the automatic bound
  // max(|D| * k, 64). Exceeding it is a nontermination diagnostic.
  int max_passes = 0;
};

// An alteration rule that fires at fixpoint but is blocked by the dominion
// rule on every legal removal. Recorded by the audit, never skipped
// silently.
struct Conflict {
  int a = 0, b = 0;  // product vertex ids of the two label carriers
  std::string rule;  // "rule1" (|S&T| > 1), "rule2" (singleton vs bigger),
                     // "rule4" (bigger vs bigger sharing one)
};

// Labels over the vertices of a minimum dominating set D of G box H,
// refined in three stages. Labels are sets of basis positions of the chosen
// gamma-set of G; a faithful label is a subset of the carrier's closed
// basis cover.
struct Labeling {
  const ProductGraph* prod = nullptr;
  const CellDecomposition* dec = nullptr;
  std::vector<FiberView> fibers;  // by h
  DominatingSet d;                // product vertex ids

  std::vector<IndexSet> label;         // by product vertex; empty outside D
  std::vector<std::vector<int>> rows;  // h -> ascending product ids of D^h
  std::vector<IndexSet> after1, after2, after3;  // per-stage snapshots
  std::vector<Conflict> conflicts;
  int passes = 0;      // full alteration sweeps until fixpoint
  int last_stage = 0;  // 0 none, 1..3

  int g_of(int v) const { return prod->coord(v).first; }
  int h_of(int v) const { return prod->coord(v).second; }
  // Dominion protection: {i} when v carries basis vertex v_i, else empty.
  IndexSet protected_of(int v) const;
};

// Builds the empty labeling and its row structure. d must dominate the
// product and have exactly gamma_product vertices; the claims are about
// minimum dominating sets only, so a non-minimum d is refused.
Labeling make_labeling(const ProductGraph& prod, const CellDecomposition& dec,
                       const DominatingSet& d, int gamma_product);

// Stage 1: cell members get their closed basis cover; shared carriers get
// their class restricted to the fiber's undominated part I^h when that
// restriction is nonempty, the full class otherwise.
void labeling1(Labeling& lab);

// Stage 2: internal (same row) and external (H-adjacent rows) alterations
// to a global fixpoint, then an audit pass recording dominion conflicts.
void labeling2(Labeling& lab, const LabelingOptions& opt, SplitMix64& rng);

// Stage 3: shared carriers inside the vertically dominated chamber shrink
// to a single element of their current label.
void labeling3(Labeling& lab, const LabelingOptions& opt, SplitMix64& rng);

// All three stages with invariant assertions between them (faithfulness,
// dominion, nonemptiness, no size growth); violations are internal bugs and
// throw ContractError.
void run_labelings(Labeling& lab, const LabelingOptions& opt);

bool verify_faithful(const Labeling& lab);
bool verify_dominion(const Labeling& lab);
bool verify_nonempty(const Labeling& lab);
// Post-stage-2 property: any two labels in the same row or in H-adjacent
// rows are both singletons or disjoint. Can only fail when conflicts were
// recorded.
bool verify_disjointness(const Labeling& lab);
int max_label_size(const Labeling& lab);

// Exact minimum set cover by branch and bound with memoization on the
// remaining universe; nullopt when the candidate union cannot cover.
// Deterministic.
std::optional<std::vector<int>> min_set_cover(
    const VertexSet& universe, const std::vector<VertexSet>& sets);

// Per-fiber multi-label accounting behind the two claims.
struct FiberAnalysis {
  int h = 0;
  std::vector<int> s1;  // product ids with label size > 1, ascending
  std::vector<int> m;   // their label sizes, aligned with s1
  IndexSet j1 = iset::empty;  // union of multi labels
  VertexSet chamber_j1;       // chamber(J1) as G vertices
  bool claim1 = false;        // chamber(J1) dominated by D^h inside the fiber
  std::optional<int> e_size;  // |E|, minimum extension from D1; nullopt only
                              // when claim1 fails
  std::vector<int> e_set;     // one minimum E, product ids
  bool claim2 = false;        // |E| >= sum (m_i - 1)
};

FiberAnalysis analyze_fiber(const Labeling& lab, int h);
bool verify_claim1(const Labeling& lab, int h);
bool verify_claim2(const FiberAnalysis& a);

// True iff {h : some v in D^h carries i} dominates H.
bool verify_projection(const Labeling& lab, int i);
bool verify_projection_all(const Labeling& lab);

struct LabelHistogram {
  std::vector<long> f;        // f[c-1] = #vertices with label size c
  std::vector<long> d_sizes;  // per basis index i, |{v in D : i in label}|
  long d_total = 0;           // |D|
  Profile t;                  // f scaled by 1/|D|
  int max_size = 0;

  long sum_di() const;
  long weighted_f() const;  // sum over c of c * f[c-1]
};

LabelHistogram histogram(const Labeling& lab);

struct Eq3Report {
  bool count_lb = false;         // (a) gammaG * gammaH <= sum |D_i|
  bool count_identity = false;   // (b) sum |D_i| = sum i * F_i
  bool label_cap = false;        // (c) max label size <= pi
  bool profile_feasible = false; // (d) F_1 >= sum_{i>=2} (i-1) F_i

  bool all() const {
    return count_lb && count_identity && label_cap && profile_feasible;
  }
};

Eq3Report verify_eq3(const LabelHistogram& hist, int gamma_g, int gamma_h,
                     int pi_g);

// Full labeling trace as pretty-printed JSON (schema 1): factors,
// decomposition, fiber table, per-row label evolution over the stages,
// conflicts, per-fiber claim analysis, projections, histogram and the
// Eq-3 style checks.
std::string trace_json(const Labeling& lab, Policy policy, uint64_t seed,
                       int gamma_h, int pi_g);

// One product instance's complete certificate: the chosen basis with its
// decomposition and refined labeling, the per-fiber claim analyses, the
// projection check, and the label accounting.
struct Certificate {
  std::vector<int> basis;  // chosen basis, ascending G-vertex ids
  int bases_tried = 0;     // candidates run, the chosen one included
  std::unique_ptr<CellDecomposition> dec;  // stable address; lab points here
  Labeling lab;
  std::vector<FiberAnalysis> analyses;  // by h
  bool claim1 = true;                   // conjunction over fibers
  bool claim2 = true;
  bool projection_all = false;
  LabelHistogram hist;
  Eq3Report eq3;

  // No alteration conflicts and every certificate check passed. Disjointness
  // is implied: it can only fail when a conflict was recorded.
  bool clean() const;
};

// Runs the whole certificate for one instance. The accounting only needs
// some minimum-allegiance gamma-set of G whose label refinement completes,
// so candidates are tried in lexicographic order and the first clean one is
// kept; if none is clean, the run for the lexicographically least basis is
// returned with its conflicts and failed checks visible. Deterministic for a
// fixed (options, d) pair. prod and d must outlive the certificate.
Certificate certify(const ProductGraph& prod, const DominatingSet& d,
                    int gamma_product, int gamma_h, int power_closed_g,
                    const LabelingOptions& opt);

}  // namespace boxdom
