// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exits nonzero when any criterion fails or runs over budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "convex_blockers/blockers.h"
#include "convex_blockers/geometry.h"
#include "convex_blockers/matchings.h"
#include "convex_blockers/oracle.h"
#include "convex_blockers/render.h"
#include "reference_drawings.h"

namespace convex_blockers {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition && pass) detail = what;
    pass = pass && condition;
  }
};

EdgeSet Sorted(EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<EdgeSet> SortedBlockers(const PolygonContext& ctx) {
  auto all = EnumerateBlockers(ctx);
  std::sort(all.begin(), all.end());
  return all;
}

Outcome BlockerCount() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const auto all = EnumerateBlockers(PolygonContext(m));
    const std::set<EdgeSet> distinct(all.begin(), all.end());
    const std::size_t expected = static_cast<std::size_t>(m) << (m - 1);
    o.Require(all.size() == expected && distinct.size() == expected,
              "m=" + std::to_string(m) + " gave " + std::to_string(distinct.size()));
  }
  return o;
}

Outcome SetEquality() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const PolygonContext ctx(m);
    const SpmFamilyIndex index = BuildFamilyIndex(ctx);
    const auto generated = SortedBlockers(ctx);
    const OracleResult pruned = FindMinimumBlockers(index, OracleMode::kClassPruned);
    o.Require(pruned.minimum_size == m && pruned.minimum_sets == generated,
              "class_pruned differs at m=" + std::to_string(m));
    if (m <= 5) {
      const OracleResult naive = FindMinimumBlockers(index, OracleMode::kNaive);
      o.Require(naive.minimum_size == m && naive.minimum_sets == generated,
                "naive differs at m=" + std::to_string(m));
    }
  }
  return o;
}

// Every (m-1)-subset of edges misses some SPM, checked by colex enumeration.
Outcome LowerBound() {
  Outcome o;
  for (int m = 2; m <= 5; ++m) {
    const PolygonContext ctx(m);
    const SpmFamilyIndex index = BuildFamilyIndex(ctx);
    const int k = m - 1;
    const int total = static_cast<int>(ctx.edge_count());
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    bool found = false;
    while (!found) {
      SpmMask hit(index.size());
      for (int i : pick) hit |= index.per_edge_hits[i];
      found = hit.all();
      int i = 0;
      while (i < k && (i + 1 < k ? pick[i] + 1 == pick[i + 1] : pick[i] + 1 == total)) {
        pick[i] = i;
        ++i;
      }
      if (i == k) break;
      ++pick[i];
    }
    o.Require(!found, "blocking set of size m-1 at m=" + std::to_string(m));
  }
  return o;
}

Outcome SpmCounts() {
  Outcome o;
  const std::size_t expected[] = {1, 2, 5, 14, 42, 132, 429};
  for (int m = 1; m <= 7; ++m) {
    o.Require(EnumerateSpms(PolygonContext(m)).size() == expected[m - 1],
              "wrong SPM count at m=" + std::to_string(m));
  }
  return o;
}

Outcome ReferenceFixtures() {
  Outcome o;
  const PolygonContext ctx6(6);
  o.Require(GenerateBlocker(ctx6, {0, 3, {1, 2, 4}}) ==
                Sorted({{0, 1}, {1, 10}, {1, 2}, {2, 3}, {2, 5}, {2, 7}}),
            "reference blocker");
  const TriangularSpec spec = MakeTriangularSpec(ctx6, 3, 8, 11);
  o.Require(spec.a == 3 && spec.b == 2 && spec.c == 1, "triangular fan sizes");
  o.Require(TriangularSpm(ctx6, 3, 8, 11) ==
                Sorted({{0, 5}, {1, 4}, {2, 3}, {6, 9}, {7, 8}, {10, 11}}),
            "triangular SPM");
  const SpmFamilyIndex index = BuildFamilyIndex(PolygonContext(3));
  o.Require(!IsBlockingSet(index, {{0, 1}, {4, 5}}), "pair blocks");
  const auto missed = MissedSpms(index, {{0, 1}, {4, 5}});
  o.Require(std::find(missed.begin(), missed.end(), Sorted({{1, 2}, {3, 4}, {0, 5}})) !=
                missed.end(),
            "missed SPM");
  return o;
}

// Structure checked edge by edge, without the library's own validator.
bool IsCaterpillarBlocker(const PolygonContext& ctx, const EdgeSet& edges) {
  const int m = ctx.m(), n = ctx.n();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (EdgesCross(ctx, edges[i], edges[j])) return false;
    }
  }
  std::vector<int> per_class(n, 0);
  for (const Edge& e : edges) ++per_class[(e.a + e.b) % n];
  for (int c = 0; c < n; ++c) {
    if (per_class[c] != (c % 2 == 1 ? 1 : 0)) return false;
  }

  // Tree: m edges, connected, on m+1 vertices.
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  if (adj.size() != edges.size() + 1) return false;
  std::set<Vertex> seen{adj.begin()->first};
  std::vector<Vertex> stack{adj.begin()->first};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (seen.size() != adj.size()) return false;

  // Boundary edges form one run [s, s+t] with 2 <= t <= m.
  std::set<int> starts;
  for (const Edge& e : edges) {
    if (e.b - e.a == 1) starts.insert(e.a);
    if (e.b - e.a == n - 1) starts.insert(e.b);
  }
  const int t = static_cast<int>(starts.size());
  if (t < 2 || t > m) return false;
  int s = -1;
  for (int v : starts) {
    if (!starts.count((v + n - 1) % n)) s = v;
  }
  if (s < 0) return false;
  for (int i = 0; i < t; ++i) {
    if (!starts.count((s + i) % n)) return false;
  }

  // Non-leaf vertices induce a path: the spine.
  for (const auto& [v, nbrs] : adj) {
    const int rel = (v - s + n) % n;
    if (nbrs.size() >= 2 && rel > t) return false;
  }

  // Legs attach at internal spine vertices; strict distance gap.
  std::vector<std::pair<int, int>> legs;
  for (const Edge& e : edges) {
    if (IsBoundary(ctx, e)) continue;
    int x = (e.a - s + n) % n, y = (e.b - s + n) % n;
    if (x > y) std::swap(x, y);
    if (x < 1 || x > t - 1 || y <= t) return false;
    legs.emplace_back(x, y);
  }
  for (const auto& [x1, y1] : legs) {
    for (const auto& [x2, y2] : legs) {
      if (x1 < x2 && !(y1 - y2 > x2 - x1)) return false;
    }
  }
  return true;
}

Outcome StructuralSuite() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const PolygonContext ctx(m);
    for (const EdgeSet& blocker : EnumerateBlockers(ctx)) {
      o.Require(IsCaterpillarBlocker(ctx, blocker),
                "m=" + std::to_string(m) + " blocker " + FormatEdgeList(blocker));
    }
  }
  struct Mutant {
    int m;
    EdgeSet edges;
    const char* violation;
  };
  const std::vector<Mutant> mutants{
      {6, {{0, 1}, {1, 2}, {2, 3}, {2, 6}, {2, 7}, {1, 10}}, "even_order_edge"},
      {6, {{0, 1}, {1, 2}, {2, 3}, {2, 9}, {2, 7}, {1, 10}}, "duplicate_parallel_class"},
      {3, {{0, 1}, {0, 3}, {1, 4}}, "too_few_boundary_edges"},
      {3, {{0, 1}, {2, 3}, {4, 5}}, "boundary_not_consecutive"},
      {4, {{0, 1}, {1, 2}, {1, 4}, {2, 5}}, "crossing_pair"},
      {4, {{0, 1}, {1, 2}, {0, 5}, {2, 5}}, "bad_attachment"},
      {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 8}, {3, 8}}, "leg_distance_gap"},
  };
  for (const Mutant& mutant : mutants) {
    const ParseResult result = ParseBlocker(PolygonContext(mutant.m), Sorted(mutant.edges));
    const auto* finding = std::get_if<Finding>(&result);
    o.Require(finding != nullptr && ViolationName(finding->violation) == mutant.violation,
              std::string("mutant ") + mutant.violation);
  }
  return o;
}

Outcome Trichotomy() {
  Outcome o;
  for (int m = 2; m <= 5; ++m) {
    const PolygonContext ctx(m);
    for (unsigned mask = 1; mask < (1u << ctx.n()); ++mask) {
      EdgeSet edges;
      for (int i = 0; i < ctx.n(); ++i) {
        if (mask >> i & 1) edges.push_back(ctx.BoundaryEdge(i));
      }
      o.Require(!ClassifyBoundarySet(ctx, Sorted(edges)).empty(),
                "empty case set at m=" + std::to_string(m));
    }
    for (const EdgeSet& blocker : EnumerateBlockers(ctx)) {
      EdgeSet boundary;
      for (const Edge& e : blocker) {
        if (IsBoundary(ctx, e)) boundary.push_back(e);
      }
      const auto cases = ClassifyBoundarySet(ctx, boundary);
      o.Require(cases.count(BoundaryCase::kHalfBoundary) &&
                    !cases.count(BoundaryCase::kOppositePair),
                "blocker boundary " + FormatEdgeList(boundary));
    }
  }
  return o;
}

Outcome RestrictionInduction() {
  Outcome o;
  for (int m = 3; m <= 6; ++m) {
    const PolygonContext ctx(m);
    const SpmFamilyIndex smaller = BuildFamilyIndex(PolygonContext(m - 1));
    for (const EdgeSet& blocker : EnumerateBlockers(ctx)) {
      const std::set<Edge> members(blocker.begin(), blocker.end());
      for (const Edge& e : blocker) {
        if (!IsBoundary(ctx, e)) continue;
        const int i = e.b == e.a + 1 ? e.a : e.b;
        for (const Edge& f : {ctx.BoundaryEdge(i - 1), ctx.BoundaryEdge(i + 1)}) {
          if (members.count(f)) continue;
          const auto r = RestrictBlocker(ctx, blocker, e, f);
          o.Require(r.ctx.m() == m - 1 && IsBlockingSet(smaller, r.edges),
                    "restriction of " + FormatEdgeList(blocker));
        }
      }
    }
  }
  return o;
}

Outcome RenderingDeterminism() {
  Outcome o;
  for (const auto& [name, spec] : testing::ReferenceDrawings()) {
    std::ifstream in(std::string(CONVEX_BLOCKERS_GOLDEN_DIR) + "/" + name + ".svg",
                     std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const std::string first = RenderFigure(spec);
    const std::string second = RenderFigure(spec);
    o.Require(!golden.str().empty() && first == second && first == golden.str(),
              name + " differs from its golden file");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_ms;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace convex_blockers

int main() {
  using convex_blockers::Criterion;
  using convex_blockers::Outcome;
  namespace cb = convex_blockers;
  const std::vector<Criterion> criteria{
      {1, "blocker count m=2..6", 5000, cb::BlockerCount},
      {2, "oracle set equality m=2..6", 60000, cb::SetEquality},
      {3, "no blocking set of size m-1, m=2..5", 60000, cb::LowerBound},
      {4, "SPM counts m=1..7", 2000, cb::SpmCounts},
      {5, "reference fixtures", 1000, cb::ReferenceFixtures},
      {6, "structural properties and mutants", 10000, cb::StructuralSuite},
      {7, "boundary trichotomy m<=5", 10000, cb::Trichotomy},
      {8, "restriction m=3..6", 30000, cb::RestrictionInduction},
      {9, "rendering determinism", 1000, cb::RenderingDeterminism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto begin = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - begin)
                          .count();
    if (outcome.pass && ms > c.budget_ms) {
      outcome = {false, "over time budget"};
    }
    failures += !outcome.pass;
    std::printf("%s criterion %d: %s (%.1f ms, budget %.0f ms)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", c.id, c.name, ms, c.budget_ms,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
