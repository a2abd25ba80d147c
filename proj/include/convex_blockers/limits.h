#ifndef CONVEX_BLOCKERS_LIMITS_H_
#define CONVEX_BLOCKERS_LIMITS_H_

namespace convex_blockers {

// Upper bounds on m for the exhaustive procedures.
struct Limits {
  int spm_max_m = 12;     // C(12) = 208012 matchings
  int naive_max_m = 5;    // all <= m subsets of m(2m-1) edges
  int pruned_max_m = 8;   // one edge per odd parallel class

  // Defaults, with every cap replaced by CONVEX_BLOCKERS_MAX_M when that
  // variable holds a positive integer.
  static Limits FromEnvironment();
};

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_LIMITS_H_
