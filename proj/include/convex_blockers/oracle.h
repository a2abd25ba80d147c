#ifndef CONVEX_BLOCKERS_ORACLE_H_
#define CONVEX_BLOCKERS_ORACLE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "convex_blockers/geometry.h"
#include "convex_blockers/limits.h"
#include "convex_blockers/matchings.h"

namespace convex_blockers {

using SpmMask = boost::dynamic_bitset<std::uint64_t>;

// The SPM family of one context, indexed both ways: each SPM as an edge mask
// and each edge as the mask of SPMs containing it.
struct SpmFamilyIndex {
  PolygonContext ctx;
  std::vector<Matching> matchings;
  std::vector<EdgeSetMask> spms;
  std::vector<SpmMask> per_edge_hits;  // indexed by PolygonContext::EdgeIndex

  std::size_t size() const { return spms.size(); }
};

SpmFamilyIndex BuildFamilyIndex(const PolygonContext& ctx,
                                const Limits& limits = {});

bool IsBlockingSet(const SpmFamilyIndex& index, const std::vector<Edge>& edges);

// The SPMs an edge set misses entirely.
std::vector<Matching> MissedSpms(const SpmFamilyIndex& index,
                                 const std::vector<Edge>& edges);

enum class OracleMode { kNaive, kClassPruned };

std::string_view OracleModeName(OracleMode mode);

struct OracleResult {
  OracleMode mode = OracleMode::kNaive;
  int minimum_size = 0;                 // 0 when nothing of size <= m blocks
  std::vector<EdgeSet> minimum_sets;    // sorted
  std::uint64_t nodes = 0;              // subsets tested / DFS nodes visited
  double millis = 0.0;
};

// kNaive tests every edge subset of size 1, 2, ..., m in colexicographic
// order and stops at the first size admitting a blocking set.
// kClassPruned picks exactly one edge from each odd parallel class by
// depth-first search, abandoning a branch as soon as the still-missed SPMs
// cannot all be hit by the remaining classes.
OracleResult FindMinimumBlockers(const SpmFamilyIndex& index, OracleMode mode,
                                 const Limits& limits = {});

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_ORACLE_H_
