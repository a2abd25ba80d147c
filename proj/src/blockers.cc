#include "convex_blockers/blockers.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "convex_blockers/errors.h"

namespace convex_blockers {
namespace {

void RequireBlockerContext(const PolygonContext& ctx) {
  if (ctx.m() < 2) {
    throw InputError("blockers are defined for m >= 2, got m=" +
                     std::to_string(ctx.m()));
  }
}

// Index i of a boundary edge [i, i+1] (mod 2m).
int BoundaryIndex(const PolygonContext& /*ctx*/, const Edge& e) {
  return e.b == e.a + 1 ? e.a : e.b;  // [0, 2m-1] is [2m-1, 0]
}

// Distinct cyclic runs of boundary indices; each run is (first index,
// length). A full cycle yields one run of length 2m starting at 0.
std::vector<std::pair<int, int>> BoundaryRuns(const PolygonContext& ctx,
                                              const std::vector<bool>& present) {
  const int n = ctx.n();
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n; ++i) {
    if (!present[i] || present[(i + n - 1) % n]) continue;
    int len = 0;
    while (len < n && present[(i + len) % n]) ++len;
    runs.emplace_back(i, len);
  }
  if (runs.empty() && n > 0 && present[0]) runs.emplace_back(0, n);
  return runs;
}

struct Leg {
  int x;  // spine position, relative to the spine start
  int y;  // off-spine endpoint, relative to the spine start
  Edge edge;
};

bool IsTree(const PolygonContext& ctx, const EdgeSet& edges) {
  std::vector<int> parent(ctx.n());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> touched(ctx.n(), false);
  for (const Edge& e : edges) {
    touched[e.a] = touched[e.b] = true;
    const int ra = find(e.a);
    const int rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  const auto vertices = std::count(touched.begin(), touched.end(), true);
  return !edges.empty() &&
         static_cast<std::size_t>(vertices) == edges.size() + 1;
}

}  // namespace

std::string_view ViolationName(Violation v) {
  switch (v) {
    case Violation::kWrongCardinality: return "wrong_cardinality";
    case Violation::kEvenOrderEdge: return "even_order_edge";
    case Violation::kDuplicateParallelClass: return "duplicate_parallel_class";
    case Violation::kTooFewBoundaryEdges: return "too_few_boundary_edges";
    case Violation::kBoundaryNotConsecutive: return "boundary_not_consecutive";
    case Violation::kCrossingPair: return "crossing_pair";
    case Violation::kBadAttachment: return "bad_attachment";
    case Violation::kLegDistanceGap: return "leg_distance_gap";
    case Violation::kNotATree: return "not_a_tree";
  }
  return "unknown";
}

void ValidateSpec(const PolygonContext& ctx, const BlockerSpec& spec) {
  RequireBlockerContext(ctx);
  const int m = ctx.m();
  if (!ctx.IsVertex(spec.start)) {
    throw InputError("spine start " + std::to_string(spec.start) +
                     " out of range");
  }
  if (spec.t < 2 || spec.t > m) {
    throw InputError("spine length t=" + std::to_string(spec.t) +
                     " outside 2.." + std::to_string(m));
  }
  if (spec.eps.size() != static_cast<std::size_t>(m - spec.t)) {
    throw InputError("eps must have m-t=" + std::to_string(m - spec.t) +
                     " entries, got " + std::to_string(spec.eps.size()));
  }
  for (std::size_t j = 0; j < spec.eps.size(); ++j) {
    if (spec.eps[j] < 1 || spec.eps[j] > m - 2) {
      throw InputError("eps entries must lie in 1.." + std::to_string(m - 2));
    }
    if (j > 0 && spec.eps[j] <= spec.eps[j - 1]) {
      throw InputError("eps must be strictly increasing");
    }
  }
}

EdgeSet GenerateBlocker(const PolygonContext& ctx, const BlockerSpec& spec) {
  ValidateSpec(ctx, spec);
  const long long s = spec.start;
  std::vector<Edge> edges;
  edges.reserve(ctx.m());
  for (int i = 1; i <= spec.t; ++i) edges.push_back(ctx.MakeEdge(s + i - 1, s + i));
  for (int j = 1; j <= ctx.m() - spec.t; ++j) {
    const int eps = spec.eps[j - 1];
    edges.push_back(
        ctx.MakeEdge(s + spec.t + j - 1 - eps, s + spec.t + j + eps));
  }
  return Canonicalize(ctx, std::move(edges));
}

ParseResult ParseBlocker(const PolygonContext& ctx, const EdgeSet& input) {
  RequireBlockerContext(ctx);
  const EdgeSet edges = Canonicalize(ctx, input);
  const int m = ctx.m();
  const int n = ctx.n();
  if (edges.size() != input.size() ||
      edges.size() != static_cast<std::size_t>(m)) {
    throw InputError("a blocker candidate needs exactly m=" +
                     std::to_string(m) + " distinct edges, got " +
                     std::to_string(input.size()));
  }

  for (const Edge& e : edges) {
    if (EdgeOrder(ctx, e) % 2 == 0) {
      return Finding{Violation::kEvenOrderEdge, {e}};
    }
  }

  std::map<int, Edge> by_class;
  for (const Edge& e : edges) {
    auto [it, inserted] = by_class.emplace(ClassId(ctx, e), e);
    if (!inserted) {
      return Finding{Violation::kDuplicateParallelClass,
                     Canonicalize(ctx, {it->second, e})};
    }
  }

  EdgeSet boundary;
  std::vector<bool> present(n, false);
  for (const Edge& e : edges) {
    if (IsBoundary(ctx, e)) {
      boundary.push_back(e);
      present[BoundaryIndex(ctx, e)] = true;
    }
  }
  if (boundary.size() < 2) {
    return Finding{Violation::kTooFewBoundaryEdges, boundary};
  }
  const auto runs = BoundaryRuns(ctx, present);
  if (runs.size() != 1 || runs.front().second == n) {
    return Finding{Violation::kBoundaryNotConsecutive, boundary};
  }
  const Vertex start = runs.front().first;
  const int t = runs.front().second;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (EdgesCross(ctx, edges[i], edges[j])) {
        return Finding{Violation::kCrossingPair, {edges[i], edges[j]}};
      }
    }
  }

  std::vector<Leg> legs;
  for (const Edge& e : edges) {
    if (IsBoundary(ctx, e)) continue;
    int x = ctx.Wrap(e.a - start);
    int y = ctx.Wrap(e.b - start);
    if (x > y) std::swap(x, y);
    if (!(x >= 1 && x <= t - 1 && y >= t + 1)) {
      return Finding{Violation::kBadAttachment, {e}};
    }
    legs.push_back(Leg{x, y, e});
  }

  for (const Leg& lo : legs) {
    for (const Leg& hi : legs) {
      if (lo.x < hi.x && !(lo.y - hi.y > hi.x - lo.x)) {
        return Finding{Violation::kLegDistanceGap,
                       Canonicalize(ctx, {lo.edge, hi.edge})};
      }
    }
  }

  BlockerSpec spec{start, t, std::vector<int>(m - t, 0)};
  for (const Leg& leg : legs) {
    const int j = (leg.x + leg.y + 1) / 2 - t;
    spec.eps.at(j - 1) = (leg.y - leg.x - 1) / 2;
  }
  if (GenerateBlocker(ctx, spec) != edges) {
    throw std::logic_error("parse of " + FormatEdgeList(edges) +
                           " passed every check but does not regenerate");
  }
  return spec;
}

std::vector<BlockerSpec> EnumerateBlockerSpecs(const PolygonContext& ctx) {
  RequireBlockerContext(ctx);
  const int m = ctx.m();
  std::vector<BlockerSpec> out;
  for (Vertex start = 0; start < ctx.n(); ++start) {
    for (int t = 2; t <= m; ++t) {
      const int k = m - t;
      // Lexicographic walk over k-subsets of 1..m-2.
      std::vector<int> eps(k);
      std::iota(eps.begin(), eps.end(), 1);
      while (true) {
        out.push_back(BlockerSpec{start, t, eps});
        int i = k - 1;
        while (i >= 0 && eps[i] == m - 2 - (k - 1 - i)) --i;
        if (i < 0) break;
        ++eps[i];
        for (int j = i + 1; j < k; ++j) eps[j] = eps[j - 1] + 1;
      }
    }
  }
  return out;
}

std::vector<EdgeSet> EnumerateBlockers(const PolygonContext& ctx) {
  std::vector<EdgeSet> out;
  for (const BlockerSpec& spec : EnumerateBlockerSpecs(ctx)) {
    out.push_back(GenerateBlocker(ctx, spec));
  }
  return out;
}

BigInt CountBlockers(int m) {
  if (m < 2) throw InputError("blocker count needs m >= 2");
  BigInt power = 1;
  power <<= (m - 1);
  return power * m;
}

BigInt CountBlockersBySpine(int m, int t) {
  if (m < 2) throw InputError("blocker count needs m >= 2");
  if (t < 2 || t > m) {
    throw InputError("spine length t=" + std::to_string(t) + " outside 2.." +
                     std::to_string(m));
  }
  const int n = m - 2;
  const int k = t - 2;
  BigInt value = 1;
  for (int i = 1; i <= k; ++i) {
    value *= n - k + i;
    value /= i;
  }
  return value;
}

CaterpillarReport ValidateCaterpillar(const PolygonContext& ctx,
                                      const EdgeSet& input) {
  const EdgeSet edges = Canonicalize(ctx, input);
  const int n = ctx.n();
  CaterpillarReport report;
  auto& found = report.violations;

  if (edges.size() != static_cast<std::size_t>(ctx.m())) {
    found.push_back({Violation::kWrongCardinality, edges});
  }
  for (const Edge& e : edges) {
    if (EdgeOrder(ctx, e) % 2 == 0) found.push_back({Violation::kEvenOrderEdge, {e}});
  }
  std::map<int, EdgeSet> by_class;
  for (const Edge& e : edges) by_class[ClassId(ctx, e)].push_back(e);
  for (const auto& [id, members] : by_class) {
    if (members.size() > 1) {
      found.push_back({Violation::kDuplicateParallelClass, members});
    }
  }

  EdgeSet boundary;
  std::vector<bool> present(n, false);
  for (const Edge& e : edges) {
    if (IsBoundary(ctx, e)) {
      boundary.push_back(e);
      present[BoundaryIndex(ctx, e)] = true;
    }
  }
  if (boundary.size() < 2) {
    found.push_back({Violation::kTooFewBoundaryEdges, boundary});
  }
  const auto runs = BoundaryRuns(ctx, present);
  if (runs.size() > 1 || (runs.size() == 1 && runs.front().second == n)) {
    found.push_back({Violation::kBoundaryNotConsecutive, boundary});
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (EdgesCross(ctx, edges[i], edges[j])) {
        found.push_back({Violation::kCrossingPair, {edges[i], edges[j]}});
      }
    }
  }

  if (!runs.empty()) {
    const auto best = std::max_element(
        runs.begin(), runs.end(),
        [](const auto& l, const auto& r) { return l.second < r.second; });
    report.spine_start = best->first;
    report.spine_length = best->second;
    for (int i = 0; i < best->second; ++i) {
      report.boundary_path.push_back(ctx.BoundaryEdge(best->first + i));
    }
    std::sort(report.boundary_path.begin(), report.boundary_path.end());

    const int t = report.spine_length;
    std::vector<Leg> legs;
    for (const Edge& e : edges) {
      if (IsBoundary(ctx, e)) continue;
      int x = ctx.Wrap(e.a - report.spine_start);
      int y = ctx.Wrap(e.b - report.spine_start);
      if (x > y) std::swap(x, y);
      if (x >= 1 && x <= t - 1 && y >= t + 1) {
        legs.push_back(Leg{x, y, e});
        report.leg_attachments[ctx.Wrap(report.spine_start + x)].push_back(e);
      } else {
        found.push_back({Violation::kBadAttachment, {e}});
      }
    }
    for (const Leg& lo : legs) {
      for (const Leg& hi : legs) {
        if (lo.x < hi.x && !(lo.y - hi.y > hi.x - lo.x)) {
          found.push_back({Violation::kLegDistanceGap,
                           Canonicalize(ctx, {lo.edge, hi.edge})});
        }
      }
    }
  }

  report.is_tree = IsTree(ctx, edges);
  if (!report.is_tree) found.push_back({Violation::kNotATree, edges});

  std::stable_sort(found.begin(), found.end(),
                   [](const Finding& l, const Finding& r) {
                     return l.violation < r.violation;
                   });
  return report;
}

Restriction RestrictBlocker(const PolygonContext& ctx, const EdgeSet& input,
                            const Edge& e, const Edge& f) {
  RequireBlockerContext(ctx);
  const EdgeSet edges = Canonicalize(ctx, input);
  if (!IsBoundary(ctx, e) || !IsBoundary(ctx, f)) {
    throw InputError("restriction needs boundary edges e and f");
  }
  if (e == f || !SharesVertex(e, f)) {
    throw InputError("e=" + FormatEdge(e) + " and f=" + FormatEdge(f) +
                     " are not consecutive boundary edges");
  }
  if (!std::binary_search(edges.begin(), edges.end(), e)) {
    throw InputError("e=" + FormatEdge(e) + " is not in the edge set");
  }
  if (std::binary_search(edges.begin(), edges.end(), f)) {
    throw InputError("f=" + FormatEdge(f) + " must not be in the edge set");
  }

  const int u = BoundaryIndex(ctx, f);  // f = [u, u+1]
  const bool wraps = u == ctx.n() - 1;
  const auto relabel = [&](Vertex v) {
    if (wraps) return v - 1;
    return v < u ? v : v - 2;
  };

  Restriction out{PolygonContext(ctx.m() - 1), {}};
  for (const Edge& g : edges) {
    if (g == e) continue;
    if (SharesVertex(g, f)) {
      throw StructureError("edge " + FormatEdge(g) + " touches f=" +
                           FormatEdge(f) + "; the input is not a blocker");
    }
    out.edges.push_back(out.ctx.MakeEdge(relabel(g.a), relabel(g.b)));
  }
  out.edges = Canonicalize(out.ctx, std::move(out.edges));
  return out;
}

std::string_view BoundaryCaseName(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::kOppositePair: return "OppositePair";
    case BoundaryCase::kHalfBoundary: return "HalfBoundary";
    case BoundaryCase::kTriangularTriple: return "TriangularTriple";
  }
  return "unknown";
}

std::set<BoundaryCase> ClassifyBoundarySet(const PolygonContext& ctx,
                                           const EdgeSet& boundary_edges) {
  if (boundary_edges.empty()) throw InputError("empty boundary edge set");
  std::vector<int> idx;
  for (const Edge& e : boundary_edges) {
    if (!IsBoundary(ctx, e)) {
      throw InputError("edge " + FormatEdge(e) + " is not a boundary edge");
    }
    idx.push_back(BoundaryIndex(ctx, e));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const int m = ctx.m();
  const std::size_t k = idx.size();

  std::set<BoundaryCase> cases;
  for (std::size_t mu = 0; mu < k; ++mu) {
    for (std::size_t nu = mu + 1; nu < k; ++nu) {
      if (idx[nu] == idx[mu] + m) cases.insert(BoundaryCase::kOppositePair);
    }
  }
  bool half = idx[k - 1] < idx[0] + m;
  for (std::size_t mu = 0; mu + 1 < k; ++mu) {
    if (idx[mu] + m < idx[mu + 1]) half = true;
  }
  if (half) cases.insert(BoundaryCase::kHalfBoundary);
  for (std::size_t mu = 0; mu < k; ++mu) {
    for (std::size_t nu = mu + 1; nu < k; ++nu) {
      if (idx[nu] >= idx[mu] + m) break;
      for (std::size_t tau = nu + 1; tau < k; ++tau) {
        if (idx[tau] >= idx[nu] + m) break;
        if (idx[tau] > idx[mu] + m) {
          cases.insert(BoundaryCase::kTriangularTriple);
        }
      }
    }
  }
  return cases;
}

}  // namespace convex_blockers
