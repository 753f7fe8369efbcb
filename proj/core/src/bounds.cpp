#include "boxdom/bounds.hpp"

#include <algorithm>

#include "boxdom/error.hpp"

namespace boxdom {

Rat profile_sum(const Profile& t) {
  Rat s = 0;
  for (const Rat& x : t) s += x;
  return s;
}

Rat profile_objective(const Profile& t) {
  Rat s = 0;
  for (size_t i = 0; i < t.size(); ++i) s += Rat(int(i) + 1) * t[i];
  return s;
}

Rat profile_slack(const Profile& t) {
  if (t.empty()) return Rat(0);
  Rat s = t[0];
  for (size_t i = 1; i < t.size(); ++i) s -= Rat(int(i)) * t[i];
  return s;
}

bool profile_nonnegative(const Profile& t) {
  for (const Rat& x : t)
    if (x < 0) return false;
  return true;
}

bool profile_feasible(const Profile& t) {
  return !t.empty() && profile_sum(t) == 1 && profile_nonnegative(t) &&
         profile_slack(t) >= 0;
}

Prop1Result prop1_max(int n) {
  if (n < 2) throw ArgumentError("prop1_max: n must be at least 2");
  Profile w(n, Rat(0));
  w[0] = Rat(n - 1, n);
  w[n - 1] = Rat(1, n);
  return {Rat(2 * n - 1, n), std::move(w)};
}

namespace {

// Solves the n x n rational system given as an augmented matrix; returns
// false when singular. Plain Gaussian elimination: exact arithmetic, so the
// pivot just needs to be nonzero.
bool solve_exact(std::vector<std::vector<Rat>> a, Profile& out) {
  const int n = int(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  out.assign(n, Rat(0));
  for (int r = 0; r < n; ++r) out[r] = a[r][n] / a[r][r];
  return true;
}

bool profile_lex_less(const Profile& a, const Profile& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_oracle_n(int n) {
  if (n < 2 || n > 8)
    throw ArgumentError("prop1 oracle: n must be between 2 and 8");
}

}  // namespace

std::vector<Profile> prop1_vertices(int n) {
  check_oracle_n(n);
  // Constraint rows: the simplex equality (always tight) plus n - 1 tight
  // picks from the n + 1 inequalities (slack row, then t_i >= 0 rows).
  std::vector<std::vector<Rat>> rows;
  rows.emplace_back(n + 1, Rat(1));  // sum t = 1
  {
    std::vector<Rat> slack(n + 1, Rat(0));
    slack[0] = 1;
    for (int i = 1; i < n; ++i) slack[i] = Rat(-i);
    rows.push_back(std::move(slack));  // t_1 - sum (i-1) t_i = 0
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> r(n + 1, Rat(0));
    r[i] = 1;
    rows.push_back(std::move(r));  // t_i = 0
  }

  std::vector<Profile> verts;
  const int m = n + 1;  // inequality count
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      // Choosing n - 1 tight inequalities out of n + 1 = dropping two.
      std::vector<std::vector<Rat>> sys;
      sys.push_back(rows[0]);
      for (int i = 0; i < m; ++i)
        if (i != a && i != b) sys.push_back(rows[1 + i]);
      Profile t;
      if (!solve_exact(std::move(sys), t)) continue;
      if (!profile_feasible(t)) continue;
      if (std::find(verts.begin(), verts.end(), t) == verts.end())
        verts.push_back(std::move(t));
    }
  }
  std::sort(verts.begin(), verts.end(), profile_lex_less);
  return verts;
}

Prop1Result prop1_oracle(int n) {
  std::vector<Profile> verts = prop1_vertices(n);
  if (verts.empty()) throw ContractError("prop1 oracle: no feasible vertex");
  const Profile* best = nullptr;
  Rat best_val;
  for (const Profile& v : verts) {
    Rat val = profile_objective(v);
    if (!best || val > best_val ||
        (val == best_val && profile_lex_less(v, *best))) {
      best = &v;
      best_val = val;
    }
  }
  return {best_val, *best};
}

Profile prop1_unbounded_ray(int n) {
  if (n < 3) throw ArgumentError("unbounded ray needs n >= 3");
  Profile r(n, Rat(0));
  r[0] = Rat(n - 2);
  r[1] = Rat(-n);
  r[n - 1] = Rat(2);
  return r;
}

bool is_unbounded_ray(const Profile& r) {
  return !r.empty() && profile_sum(r) == 0 && profile_slack(r) >= 0 &&
         profile_objective(r) > 0;
}

Profile sample_feasible_profile(int n, SplitMix64& rng) {
  if (n < 1) throw ArgumentError("profile dimension must be positive");
  Profile t(n);
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    Int num = Int(rng.next());
    t[i] = Rat(num);
    total += num;
  }
  if (total == 0) {
    t.assign(n, Rat(0));
    t[0] = 1;
    return t;
  }
  for (Rat& x : t) x /= Rat(total);
  Rat g = profile_slack(t);
  if (g < 0) {
    // Mix toward e_1: slack is affine in the mix parameter and equals 1 at
    // e_1, so lambda = -g/(1 - g) lands exactly on the boundary.
    Rat lam = -g / (1 - g);
    for (Rat& x : t) x *= (1 - lam);
    t[0] += lam;
  }
  return t;
}

Rat coefficient(int k) {
  if (k < 0) throw ArgumentError("coefficient: negative k");
  if (k == 0) return Rat(0);
  return Rat(k, 2 * k - 1);
}

BoundReport bounds(int gamma_g, int gamma_h, int pi_g, int delta_g) {
  if (gamma_g < 1 || gamma_h < 1 || pi_g < 1)
    throw ArgumentError("bounds: gamma and pi inputs must be positive");
  if (delta_g < 0) throw ArgumentError("bounds: negative max degree");
  BoundReport r;
  r.gamma_g = gamma_g;
  r.gamma_h = gamma_h;
  r.pi_g = pi_g;
  r.delta_g = delta_g;
  Rat gg = Rat(gamma_g) * Rat(gamma_h);
  r.vizing_rhs = gg;
  r.suen_tarr_rhs = gg / 2 + Rat(std::min(gamma_g, gamma_h), 2);
  r.pi_bound_rhs = coefficient(pi_g) * gg;
  r.gamma_bound_rhs = coefficient(gamma_g) * gg;
  r.delta_bound_rhs = coefficient(delta_g) * gg;
  r.improves_suen_tarr = improvement_region(gamma_g, gamma_h);
  return r;
}

bool bound_holds(int gamma_product, const Rat& rhs) {
  return Int(gamma_product) >= rat_ceil(rhs);
}

void apply_product(BoundReport& r, int gamma_product) {
  r.gamma_product = gamma_product;
  r.vizing_holds = bound_holds(gamma_product, r.vizing_rhs);
  r.suen_tarr_holds = bound_holds(gamma_product, r.suen_tarr_rhs);
  r.pi_bound_holds = bound_holds(gamma_product, r.pi_bound_rhs);
  r.gamma_bound_holds = bound_holds(gamma_product, r.gamma_bound_rhs);
  r.delta_bound_holds = bound_holds(gamma_product, r.delta_bound_rhs);
}

bool improvement_region(int gamma_g, int gamma_h) {
  if (gamma_g < 1 || gamma_h < 1)
    throw ArgumentError("improvement_region: gammas must be positive");
  int lo = std::min(gamma_g, gamma_h);
  Rat gg = Rat(gamma_g) * Rat(gamma_h);
  Rat st = gg / 2 + Rat(lo, 2);
  return coefficient(lo) * gg > st;
}

}  // namespace boxdom
