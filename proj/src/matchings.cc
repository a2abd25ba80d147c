#include "convex_blockers/matchings.h"

#include <algorithm>
#include <string>

#include "convex_blockers/errors.h"

namespace convex_blockers {
namespace {

// All non-crossing perfect matchings of the consecutive labels lo..hi. The
// lowest label is matched to some k at odd distance; the labels strictly
// between them and those after k are matched independently.
std::vector<std::vector<Edge>> MatchInterval(Vertex lo, Vertex hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<Edge>> out;
  for (Vertex k = lo + 1; k <= hi; k += 2) {
    const auto inner = MatchInterval(lo + 1, k - 1);
    const auto outer = MatchInterval(k + 1, hi);
    for (const auto& in : inner) {
      for (const auto& rest : outer) {
        std::vector<Edge> edges;
        edges.reserve(1 + in.size() + rest.size());
        edges.push_back(Edge{lo, k});
        edges.insert(edges.end(), in.begin(), in.end());
        edges.insert(edges.end(), rest.begin(), rest.end());
        out.push_back(std::move(edges));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Matching> EnumerateSpms(const PolygonContext& ctx,
                                    const Limits& limits) {
  if (ctx.m() > limits.spm_max_m) {
    throw ResourceError("SPM enumeration for m=" + std::to_string(ctx.m()) +
                        " exceeds the cap m<=" +
                        std::to_string(limits.spm_max_m));
  }
  std::vector<Matching> out = MatchInterval(0, ctx.n() - 1);
  for (auto& matching : out) std::sort(matching.begin(), matching.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool IsSpm(const PolygonContext& ctx, const std::vector<Edge>& edges) {
  if (edges.size() != static_cast<std::size_t>(ctx.m())) return false;
  std::vector<bool> covered(ctx.n(), false);
  for (const Edge& e : edges) {
    if (!ctx.IsVertex(e.a) || !ctx.IsVertex(e.b) || e.a >= e.b) return false;
    if (covered[e.a] || covered[e.b]) return false;
    covered[e.a] = covered[e.b] = true;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (EdgesCross(ctx, edges[i], edges[j])) return false;
    }
  }
  // m disjoint edges on 2m vertices cover everything.
  return true;
}

Matching ParallelSpm(const PolygonContext& ctx, int l) {
  if (l < 1 || l > ctx.m()) {
    throw InputError("parallel SPM index l=" + std::to_string(l) +
                     " outside 1.." + std::to_string(ctx.m()));
  }
  return ParallelClass(ctx, (2 * l - 1) % ctx.n());
}

TriangularSpec MakeTriangularSpec(const PolygonContext& ctx, int i1, int i2,
                                  int i3) {
  const int n = ctx.n();
  if (!(1 <= i1 && i1 < i2 && i2 < i3 && i3 <= n)) {
    throw InputError("triangular SPM needs 1 <= i1 < i2 < i3 <= " +
                     std::to_string(n) + ", got " + std::to_string(i1) + "," +
                     std::to_string(i2) + "," + std::to_string(i3));
  }
  TriangularSpec spec;
  spec.i1 = i1;
  spec.i2 = i2;
  spec.i3 = i3;
  spec.p = i2 - i1;
  spec.q = i3 - i2;
  spec.r = i1 + n - i3;
  const int m = ctx.m();
  if (spec.p >= m || spec.q >= m || spec.r >= m) {
    throw InfeasibleError(
        "no triangular SPM: cyclic distances (" + std::to_string(spec.p) +
        "," + std::to_string(spec.q) + "," + std::to_string(spec.r) +
        ") must all be less than m=" + std::to_string(m));
  }
  spec.a = m - spec.q;
  spec.b = m - spec.r;
  spec.c = m - spec.p;
  return spec;
}

Matching TriangularSpm(const PolygonContext& ctx, int i1, int i2, int i3) {
  const TriangularSpec spec = MakeTriangularSpec(ctx, i1, i2, i3);
  std::vector<Edge> edges;
  edges.reserve(ctx.m());
  const auto add_fan = [&](int i, int size) {
    for (int eps = 0; eps < size; ++eps) {
      edges.push_back(ctx.MakeEdge(i - 1 - eps, i + eps));
    }
  };
  add_fan(spec.i1, spec.a);
  add_fan(spec.i2, spec.b);
  add_fan(spec.i3, spec.c);
  return Canonicalize(ctx, std::move(edges));
}

Matching TriangularSpmFromFans(const PolygonContext& ctx, int i0, int a, int b,
                               int c) {
  if (a < 1 || b < 1 || c < 1 || a + b + c != ctx.m()) {
    throw InputError("fan sizes must be positive with a+b+c=m");
  }
  if (!ctx.IsVertex(i0)) {
    throw InputError("start vertex " + std::to_string(i0) + " out of range");
  }
  // Boundary edges sit in the middle of each fan; labels 1..2m, with 2m
  // standing for the edge [2m-1, 0].
  std::vector<int> ends = {ctx.Wrap(i0 + a), ctx.Wrap(i0 + 2 * a + b),
                           ctx.Wrap(i0 + 2 * a + 2 * b + c)};
  for (int& i : ends) {
    if (i == 0) i = ctx.n();
  }
  std::sort(ends.begin(), ends.end());
  return TriangularSpm(ctx, ends[0], ends[1], ends[2]);
}

}  // namespace convex_blockers
