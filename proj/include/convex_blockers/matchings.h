#ifndef CONVEX_BLOCKERS_MATCHINGS_H_
#define CONVEX_BLOCKERS_MATCHINGS_H_

#include <vector>

#include "convex_blockers/geometry.h"
#include "convex_blockers/limits.h"

namespace convex_blockers {

// A simple perfect matching (SPM): m pairwise vertex-disjoint, pairwise
// non-crossing edges covering all 2m vertices. Stored canonically.
using Matching = EdgeSet;

// Every SPM of CK(2m), each once, ordered lexicographically by sorted edge
// list. Throws ResourceError when m exceeds limits.spm_max_m.
std::vector<Matching> EnumerateSpms(const PolygonContext& ctx,
                                    const Limits& limits = {});

bool IsSpm(const PolygonContext& ctx, const std::vector<Edge>& edges);

// M_l: the parallel class of the boundary edge [l-1, l], i.e. all [i, j]
// with i + j == 2l - 1 (mod 2m). Requires 1 <= l <= m.
Matching ParallelSpm(const PolygonContext& ctx, int l);

// Boundary edges [i1-1, i1], [i2-1, i2], [i3-1, i3] together with the derived
// quantities of the three-fan construction.
struct TriangularSpec {
  int i1 = 0;
  int i2 = 0;
  int i3 = 0;
  int p = 0;  // directed distance from the first edge to the second
  int q = 0;
  int r = 0;
  int a = 0;  // fan sizes: a edges parallel to the first edge, ...
  int b = 0;
  int c = 0;
};

// Validates 1 <= i1 < i2 < i3 <= 2m (i3 == 2m names the edge [2m-1, 0]) and
// derives distances and fan sizes. Throws InputError for bad labels and
// InfeasibleError when some cyclic distance is >= m.
TriangularSpec MakeTriangularSpec(const PolygonContext& ctx, int i1, int i2,
                                  int i3);

// The triangular SPM whose only boundary edges are the three given ones.
Matching TriangularSpm(const PolygonContext& ctx, int i1, int i2, int i3);

// Same family, parameterized by a starting vertex and fan sizes a + b + c = m,
// all positive. Converts to boundary-edge form and delegates.
Matching TriangularSpmFromFans(const PolygonContext& ctx, int i0, int a, int b,
                               int c);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_MATCHINGS_H_
