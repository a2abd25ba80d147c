#ifndef CONVEX_BLOCKERS_BLOCKERS_H_
#define CONVEX_BLOCKERS_BLOCKERS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convex_blockers/geometry.h"

namespace convex_blockers {

using BigInt = boost::multiprecision::cpp_int;

// Canonical parameters of a blocker. The spine is the boundary path
// start, start+1, ..., start+t; leg j (1-based) joins start+t+j-1-eps[j-1]
// to start+t+j+eps[j-1]. eps has length m-t and is strictly increasing
// within 1..m-2.
struct BlockerSpec {
  Vertex start = 0;
  int t = 2;
  std::vector<int> eps;

  friend bool operator==(const BlockerSpec&, const BlockerSpec&) = default;
};

// Throws InputError unless spec is a valid parameter set for ctx (m >= 2).
void ValidateSpec(const PolygonContext& ctx, const BlockerSpec& spec);

EdgeSet GenerateBlocker(const PolygonContext& ctx, const BlockerSpec& spec);

// Structural conditions, in the order parse checks them.
enum class Violation {
  kWrongCardinality,
  kEvenOrderEdge,
  kDuplicateParallelClass,
  kTooFewBoundaryEdges,
  kBoundaryNotConsecutive,
  kCrossingPair,
  kBadAttachment,
  kLegDistanceGap,
  kNotATree,
};

std::string_view ViolationName(Violation v);

struct Finding {
  Violation violation;
  EdgeSet witness;
};

using ParseResult = std::variant<BlockerSpec, Finding>;

// Inverse of GenerateBlocker. Reports the first violated condition in the
// order of the Violation enumerators. Throws InputError when |edges| != m.
ParseResult ParseBlocker(const PolygonContext& ctx, const EdgeSet& edges);

// All m * 2^(m-1) blockers ordered by (start, t, eps). Requires m >= 2.
std::vector<EdgeSet> EnumerateBlockers(const PolygonContext& ctx);
std::vector<BlockerSpec> EnumerateBlockerSpecs(const PolygonContext& ctx);

BigInt CountBlockers(int m);
// C(m-2, t-2): blockers with a fixed oriented spine start and t boundary
// edges.
BigInt CountBlockersBySpine(int m, int t);

struct CaterpillarReport {
  bool is_tree = false;
  EdgeSet boundary_path;  // longest consecutive run of boundary edges
  Vertex spine_start = 0;
  int spine_length = 0;
  // Internal spine vertex -> incident non-boundary edges.
  std::map<Vertex, EdgeSet> leg_attachments;
  // Every failed condition, in enumerator order.
  std::vector<Finding> violations;

  bool ok() const { return violations.empty(); }
};

CaterpillarReport ValidateCaterpillar(const PolygonContext& ctx,
                                      const EdgeSet& edges);

struct Restriction {
  PolygonContext ctx;
  EdgeSet edges;
};

// Deletes the endpoints of the boundary edge f, drops e, and relabels the
// remaining 2m-2 vertices 0..2m-3 in cyclic order. Requires e in edges,
// f not in edges, e and f adjacent boundary edges. Throws StructureError
// when another edge touches an endpoint of f.
Restriction RestrictBlocker(const PolygonContext& ctx, const EdgeSet& edges,
                            const Edge& e, const Edge& f);

enum class BoundaryCase { kOppositePair, kHalfBoundary, kTriangularTriple };

std::string_view BoundaryCaseName(BoundaryCase c);

// Every case of the opposite pair / half-boundary / triangular triple
// trichotomy that holds for a nonempty set of boundary edges.
std::set<BoundaryCase> ClassifyBoundarySet(const PolygonContext& ctx,
                                           const EdgeSet& boundary_edges);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_BLOCKERS_H_
