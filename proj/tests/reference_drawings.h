#ifndef CONVEX_BLOCKERS_TESTS_REFERENCE_DRAWINGS_H_
#define CONVEX_BLOCKERS_TESTS_REFERENCE_DRAWINGS_H_

#include <string>
#include <vector>

#include "convex_blockers/blockers.h"
#include "convex_blockers/matchings.h"
#include "convex_blockers/render.h"

namespace convex_blockers::testing {

struct NamedFigure {
  std::string name;
  RenderSpec spec;
};

// The three reference drawings kept as golden SVGs.
inline std::vector<NamedFigure> ReferenceDrawings() {
  const PolygonContext ctx(6);
  const Matching triangular = TriangularSpm(ctx, 3, 8, 11);
  return {
      {"blocker_with_context",
       {6,
        {{GenerateBlocker(ctx, {0, 3, {1, 2, 4}}), EdgeStyle::kSolid},
         {{{2, 9}}, EdgeStyle::kDotted}}}},
      {"triangular_fans",
       {6, {{triangular, EdgeStyle::kSolid}, {{{0, 5}, {6, 9}, {10, 11}}, EdgeStyle::kThick}}}},
      {"triangular_boundary",
       {6, {{triangular, EdgeStyle::kSolid}, {{{2, 3}, {7, 8}, {10, 11}}, EdgeStyle::kThick}}}},
  };
}

}  // namespace convex_blockers::testing

#endif  // CONVEX_BLOCKERS_TESTS_REFERENCE_DRAWINGS_H_
