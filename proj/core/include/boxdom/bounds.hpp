#pragma once

#include <vector>

#include "boxdom/rational.hpp"
#include "boxdom/rng.hpp"

namespace boxdom {

// Profile over label cardinalities: t[i] is the fraction of vertices whose
// label has i+1 elements. Feasible points satisfy sum t_i = 1, t >= 0 and
// t_1 >= sum_{i>=2} (i-1) t_i (1-based in the math, 0-based in the vector).
using Profile = std::vector<Rat>;

Rat profile_sum(const Profile& t);
// f(t) = sum i * t_i.
Rat profile_objective(const Profile& t);
// t_1 - sum_{i>=2} (i-1) t_i; feasibility needs this >= 0.
Rat profile_slack(const Profile& t);
bool profile_nonnegative(const Profile& t);
bool profile_feasible(const Profile& t);

struct Prop1Result {
  Rat value;
  Profile witness;
};

// Closed form: max f = (2n-1)/n, attained at t_1 = (n-1)/n, t_n = 1/n.
// Requires n >= 2.
Prop1Result prop1_max(int n);

// Independent check by exact vertex enumeration: the feasible set is a
// bounded polytope, so the maximum of a linear functional sits at a vertex;
// every full-rank tight subsystem is solved exactly over the rationals and
// the best feasible solution returned. Requires 2 <= n <= 8.
Prop1Result prop1_oracle(int n);

// All polytope vertices, sorted lexicographically. Same bounds on n.
std::vector<Profile> prop1_vertices(int n);

// Without t >= 0 the program is unbounded for n >= 3: a direction that
// keeps sum t_i and the slack constraint invariant while strictly
// increasing f. Some coordinate is necessarily negative.
Profile prop1_unbounded_ray(int n);
// True iff r sums to zero, does not decrease the slack, and has positive
// objective gain: exactly what certifies unboundedness of the relaxation.
bool is_unbounded_ray(const Profile& r);

// Uniform-ish random feasible profile: a random simplex point, pulled
// toward e_1 onto the constraint boundary if the slack came out negative.
Profile sample_feasible_profile(int n, SplitMix64& rng);

// k / (2k - 1). Decreases from 1 (k = 1) toward 1/2. k = 0 is allowed and
// yields 0: the bound degenerates rather than erroring, which keeps
// edgeless factors (max degree 0) usable in reports.
Rat coefficient(int k);

struct BoundReport {
  int gamma_g = 0, gamma_h = 0, pi_g = 0, delta_g = 0;
  Rat vizing_rhs;     // gamma(G) gamma(H), the conjectured bound
  Rat suen_tarr_rhs;  // (1/2) gamma gamma + (1/2) min(gammaG, gammaH)
  Rat pi_bound_rhs;   // piG/(2 piG - 1) * gamma gamma
  Rat gamma_bound_rhs;  // gammaG/(2 gammaG - 1) * gamma gamma
  Rat delta_bound_rhs;  // deltaG/(2 deltaG - 1) * gamma gamma
  bool improves_suen_tarr = false;  // best-orientation gamma-bound beats ST

  // Filled once the exact product value is known (apply_product).
  int gamma_product = -1;
  bool vizing_holds = false, suen_tarr_holds = false, pi_bound_holds = false,
       gamma_bound_holds = false, delta_bound_holds = false;
};

// Exact rational bound values. gammaG, gammaH, piG >= 1; deltaG >= 0.
BoundReport bounds(int gamma_g, int gamma_h, int pi_g, int delta_g);

// gamma is integral, so a rational lower bound rhs holds iff
// gamma >= ceil(rhs); no tolerances anywhere.
bool bound_holds(int gamma_product, const Rat& rhs);

// Sets gamma_product and all holds flags.
void apply_product(BoundReport& r, int gamma_product);

// True iff the gamma-bound, applied with the better factor orientation,
// strictly beats Suen-Tarr. Algebraically equivalent to
// min < (max + 1)/2, i.e. max >= 2 min; the equivalence is itself under
// test on an integer grid.
bool improvement_region(int gamma_g, int gamma_h);

}  // namespace boxdom
