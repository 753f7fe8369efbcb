#include "boxdom/solver.hpp"

#include <algorithm>

#include "boxdom/error.hpp"

namespace boxdom {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  explicit Deadline(const SolveOptions& opt) {
    if (opt.budget) at = Clock::now() + *opt.budget;
  }
  bool expired() const { return at && Clock::now() > *at; }
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
  VertexSet covered(g.order());
  s.for_each([&](int v) { covered |= g.closed_neighbors(v); });
  return covered.is_full();
}

int greedy_domination_upper(const Graph& g, VertexSet* out) {
  int n = g.order();
  VertexSet chosen(n), covered(n);
  while (!covered.is_full()) {
    int best = -1, gain = -1;
    for (int v = 0; v < n; ++v) {
      if (chosen.test(v)) continue;
      int cover = (g.closed_neighbors(v) - covered).count();
      if (cover > gain) {
        gain = cover;
        best = v;
      }
    }
    chosen.set(best);
    covered |= g.closed_neighbors(best);
  }
  if (out) *out = chosen;
  return chosen.count();
}

namespace {

// Greedy packing of pairwise disjoint closed neighborhoods restricted to a
// target set: each packed target needs a private dominator.
int packing_lower(const Graph& g, const VertexSet& targets) {
  VertexSet blocked(g.order());
  int packed = 0;
  for (int v = targets.first(); v >= 0; v = targets.next(v)) {
    if (g.closed_neighbors(v).intersects(blocked)) continue;
    blocked |= g.closed_neighbors(v);
    ++packed;
  }
  return packed;
}

}  // namespace

int packing_lower_bound(const Graph& g) {
  return packing_lower(g, VertexSet::full(g.order()));
}

namespace {

struct BranchAndBound {
  const Graph& g;
  int n;
  Deadline deadline;
  int best;
  VertexSet best_set;
  int root_lower;
  std::uint64_t nodes = 0;

  BranchAndBound(const Graph& g_, const SolveOptions& opt)
      : g(g_), n(g_.order()), deadline(opt) {
    best = greedy_domination_upper(g, &best_set);
    root_lower = packing_lower(g, VertexSet::full(n));
  }

  void check_time() {
    if ((++nodes & 1023) == 0 && deadline.expired())
      throw TimeoutError("domination_number budget exhausted", root_lower,
                         best);
  }

  void rec(VertexSet chosen, const VertexSet& dominated,
           VertexSet forbidden) {
    check_time();
    int size = chosen.count();
    if (dominated.is_full()) {
      if (size < best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    if (size + 1 >= best) return;
    VertexSet undominated = ~dominated;
    if (size + packing_lower(g, undominated) >= best) return;

    // Undominated vertex with the fewest remaining dominators.
    int pick = -1, fewest = n + 1;
    for (int v = undominated.first(); v >= 0; v = undominated.next(v)) {
      int options = (g.closed_neighbors(v) - forbidden).count();
      if (options < fewest) {
        fewest = options;
        pick = v;
      }
    }
    if (fewest == 0) return;  // this vertex can no longer be dominated

    VertexSet candidates = g.closed_neighbors(pick) - forbidden;
    for (int c = candidates.first(); c >= 0; c = candidates.next(c)) {
      VertexSet next_chosen = chosen;
      next_chosen.set(c);
      rec(next_chosen, dominated | g.closed_neighbors(c), forbidden);
      forbidden.set(c);  // later branches must dominate `pick` differently
    }
  }

  void run() {
    if (n == 0) {
      best = 0;
      best_set = VertexSet(0);
      return;
    }
    rec(VertexSet(n), VertexSet(n), VertexSet(n));
  }
};

}  // namespace

int domination_number(const Graph& g, const SolveOptions& opt) {
  BranchAndBound bb(g, opt);
  bb.run();
  return bb.best;
}

namespace {

// Depth-first subset search in include-first order, which visits candidate
// sets in lexicographic member order. Shared by the gamma-set enumerator
// and min_dominating_set.
struct LexEnumerator {
  const Graph& g;
  int n;
  int target;  // exact set size
  Deadline deadline;
  const std::function<bool(const VertexSet&)>& yield;
  int max_closed = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;

  LexEnumerator(const Graph& g_, int target_,
                const std::function<bool(const VertexSet&)>& yield_,
                const SolveOptions& opt)
      : g(g_), n(g_.order()), target(target_), deadline(opt), yield(yield_) {
    for (int v = 0; v < n; ++v)
      max_closed = std::max(max_closed, g.closed_neighbors(v).count());
  }

  void rec(int v, VertexSet chosen, const VertexSet& dominated, int size) {
    if (stopped) return;
    if ((++nodes & 1023) == 0 && deadline.expired())
      throw TimeoutError("gamma-set enumeration budget exhausted", target,
                         target);
    if (size == target) {
      if (dominated.is_full() && !yield(chosen)) stopped = true;
      return;
    }
    if (v == n) return;
    // Remaining picks cannot cover the deficit.
    VertexSet undominated = ~dominated;
    if (long(target - size) * max_closed < undominated.count()) return;
    // Some undominated vertex has all of its dominators already skipped.
    VertexSet available = VertexSet(n);
    for (int u = v; u < n; ++u) available.set(u);
    for (int u = undominated.first(); u >= 0; u = undominated.next(u))
      if (!g.closed_neighbors(u).intersects(available)) return;

    VertexSet with = chosen;
    with.set(v);
    rec(v + 1, with, dominated | g.closed_neighbors(v), size + 1);
    rec(v + 1, chosen, dominated, size);
  }

  void run() {
    if (n == 0) {
      VertexSet empty(0);
      yield(empty);
      return;
    }
    rec(0, VertexSet(n), VertexSet(n), 0);
  }
};

}  // namespace

void enumerate_gamma_sets(const Graph& g,
                          const std::function<bool(const VertexSet&)>& yield,
                          const SolveOptions& opt) {
  int gamma = domination_number(g, opt);
  LexEnumerator e(g, gamma, yield, opt);
  e.run();
}

std::vector<VertexSet> gamma_sets(const Graph& g) {
  std::vector<VertexSet> out;
  enumerate_gamma_sets(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

VertexSet min_dominating_set(const Graph& g, const SolveOptions& opt) {
  VertexSet result(g.order());
  bool found = false;
  enumerate_gamma_sets(
      g,
      [&](const VertexSet& s) {
        result = s;
        found = true;
        return false;  // first set in lex order
      },
      opt);
  if (!found) throw Error("internal: no gamma-set found");
  return result;
}

int allegiance(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d))
    throw ContractError("allegiance requires a dominating set");
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    best = std::max(best, (d & g.closed_neighbors(v)).count());
  return best;
}

int power_closed(const Graph& g) {
  if (!g.is_connected())
    throw ArgumentError("power is defined for connected graphs only");
  int best = g.order() + 1;
  enumerate_gamma_sets(g, [&](const VertexSet& s) {
    best = std::min(best, allegiance(g, s));
    return best > 1;  // allegiance 1 is the global minimum
  });
  return best;
}

bool is_1k_set(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw ArgumentError("is_1k_set requires k >= 1");
  for (int v = 0; v < g.order(); ++v) {
    if (s.test(v)) continue;
    int c = (g.neighbors(v) & s).count();
    if (c < 1 || c > k) return false;
  }
  return true;
}

namespace {

// Exhaustive minimum [1,k]-set via combinations of ascending size, pruned on
// vertices already decided to stay outside: their open-degree into the set
// can only grow, so exceeding k is fatal, and zero with no candidates left is
// too. Guarded so a CLI call cannot wander into an intractable enumeration.
struct OneKSearch {
  const Graph& g;
  int n, k;

  bool viable(int v, const VertexSet& chosen) const {
    VertexSet future(n);
    for (int u = v; u < n; ++u) future.set(u);
    for (int u = 0; u < v; ++u) {
      if (chosen.test(u)) continue;
      int cnt = (g.neighbors(u) & chosen).count();
      if (cnt > k) return false;
      if (cnt == 0 && !g.neighbors(u).intersects(future)) return false;
    }
    return true;
  }

  bool combos(int v, VertexSet chosen, int remaining) {
    if (remaining == 0) return is_1k_set(g, chosen, k);
    if (n - v < remaining) return false;
    if (!viable(v, chosen)) return false;
    VertexSet with = chosen;
    with.set(v);
    return combos(v + 1, with, remaining - 1) ||
           combos(v + 1, chosen, remaining);
  }
};

}  // namespace

int gamma_1k(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("gamma_1k requires k >= 1");
  int n = g.order();
  if (n > 32)
    throw LimitError("gamma_1k enumeration is capped at 32 vertices");
  int gamma = domination_number(g);
  for (int size = gamma; size <= n; ++size) {
    OneKSearch search{g, n, k};
    if (search.combos(0, VertexSet(n), size)) return size;
  }
  throw Error("internal: V itself must be a [1,k]-set");
}

int power_open(const Graph& g) {
  if (!g.is_connected())
    throw ArgumentError("power is defined for connected graphs only");
  int gamma = domination_number(g);
  for (int k = 1; k <= g.order(); ++k)
    if (gamma_1k(g, k) == gamma) return k;
  throw Error("internal: gamma_1k(g, n) must equal gamma");
}

PowerReport power_report(const Graph& g) {
  if (!g.is_connected())
    throw ArgumentError("power is defined for connected graphs only");
  PowerReport r;
  r.gamma = domination_number(g);
  r.witness_set = VertexSet(g.order());
  int best = g.order() + 1;
  enumerate_gamma_sets(g, [&](const VertexSet& s) {
    ++r.num_gamma_sets;
    int a = allegiance(g, s);
    if (a < best) {
      best = a;
      r.witness_set = s;
    }
    return true;
  });
  r.allegiance_of_witness = best;
  r.power_closed = best;
  r.power_open = power_open(g);
  r.agree = r.power_open == r.power_closed;
  return r;
}

}  // namespace boxdom
