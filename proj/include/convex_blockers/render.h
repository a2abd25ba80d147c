#ifndef CONVEX_BLOCKERS_RENDER_H_
#define CONVEX_BLOCKERS_RENDER_H_

#include <string>
#include <vector>

#include "convex_blockers/geometry.h"

namespace convex_blockers {

enum class EdgeStyle { kDotted, kSolid, kThick };

struct EdgeLayer {
  EdgeSet edges;
  EdgeStyle style = EdgeStyle::kSolid;
};

// A drawing of CK(2m) on a regular 2m-gon: vertex 0 at the top, labels
// increasing counterclockwise, edges as straight chords.
struct RenderSpec {
  int m = 2;
  std::vector<EdgeLayer> layers;
  bool vertex_labels = true;
};

// Standalone SVG on a fixed 600x600 canvas with every coordinate printed to
// three decimals, so equal specs give identical bytes. An edge listed in
// several layers is drawn once, in its heaviest style. Throws InputError for
// edges outside CK(2m).
std::string RenderFigure(const RenderSpec& spec);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_RENDER_H_
