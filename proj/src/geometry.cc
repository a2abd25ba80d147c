#include "convex_blockers/geometry.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

#include "convex_blockers/errors.h"

namespace convex_blockers {

PolygonContext::PolygonContext(int m) : m_(m) {
  if (m < 1) throw InputError("m must be at least 1, got " + std::to_string(m));
}

Vertex PolygonContext::Wrap(long long v) const {
  const long long n2 = n();
  return static_cast<Vertex>(((v % n2) + n2) % n2);
}

Edge PolygonContext::MakeEdge(long long u, long long v) const {
  const Vertex x = Wrap(u);
  const Vertex y = Wrap(v);
  if (x == y) {
    throw InputError("degenerate edge on vertex " + std::to_string(x));
  }
  return x < y ? Edge{x, y} : Edge{y, x};
}

void PolygonContext::Validate(const Edge& e) const {
  if (!IsVertex(e.a) || !IsVertex(e.b)) {
    throw InputError("edge " + FormatEdge(e) + " has a vertex outside 0.." +
                     std::to_string(n() - 1));
  }
  if (e.a >= e.b) {
    throw InputError("edge " + FormatEdge(e) + " is not normalized (a < b)");
  }
}

std::size_t PolygonContext::EdgeIndex(const Edge& e) const {
  Validate(e);
  const std::size_t a = e.a;
  const std::size_t nn = n();
  // Rows 0..a-1 hold (nn-1) + (nn-2) + ... + (nn-a) pairs.
  return a * (2 * nn - a - 1) / 2 + (e.b - e.a - 1);
}

Edge PolygonContext::EdgeAt(std::size_t index) const {
  if (index >= edge_count()) {
    throw InputError("edge index " + std::to_string(index) + " out of range");
  }
  Vertex a = 0;
  std::size_t row = n() - 1;
  while (index >= row) {
    index -= row;
    ++a;
    --row;
  }
  return Edge{a, a + 1 + static_cast<Vertex>(index)};
}

EdgeSet Canonicalize(const PolygonContext& ctx, std::vector<Edge> edges) {
  for (const Edge& e : edges) ctx.Validate(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

int EdgeOrder(const PolygonContext& ctx, const Edge& e) {
  ctx.Validate(e);
  const int k = e.b - e.a;
  return std::min(k, ctx.n() - k);
}

int ClassId(const PolygonContext& ctx, const Edge& e) {
  ctx.Validate(e);
  return (e.a + e.b) % ctx.n();
}

bool SharesVertex(const Edge& e, const Edge& f) {
  return e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
}

bool AreParallel(const PolygonContext& ctx, const Edge& e, const Edge& f) {
  ctx.Validate(e);
  ctx.Validate(f);
  if (SharesVertex(e, f)) return false;
  return ClassId(ctx, e) == ClassId(ctx, f);
}

EdgeSet ParallelClass(const PolygonContext& ctx, int class_id) {
  if (class_id < 0 || class_id >= ctx.n()) {
    throw InputError("class id " + std::to_string(class_id) +
                     " outside 0.." + std::to_string(ctx.n() - 1));
  }
  EdgeSet out;
  for (Vertex i = 0; i < ctx.n(); ++i) {
    const Vertex j = ctx.Wrap(static_cast<long long>(class_id) - i);
    if (i < j) out.push_back(Edge{i, j});
  }
  return out;
}

bool EdgesCross(const PolygonContext& ctx, const Edge& e, const Edge& f) {
  ctx.Validate(e);
  ctx.Validate(f);
  if (SharesVertex(e, f)) return false;
  // With a < b the open arc (a, b) is just the integer interval.
  const bool fa_inside = e.a < f.a && f.a < e.b;
  const bool fb_inside = e.a < f.b && f.b < e.b;
  return fa_inside != fb_inside;
}

EdgeSetMask::EdgeSetMask(const PolygonContext& ctx)
    : ctx_(ctx), bits_(ctx.edge_count()) {}

EdgeSetMask::EdgeSetMask(const PolygonContext& ctx, std::span<const Edge> edges)
    : EdgeSetMask(ctx) {
  for (const Edge& e : edges) Insert(e);
}

void EdgeSetMask::Insert(const Edge& e) { bits_.set(ctx_.EdgeIndex(e)); }

bool EdgeSetMask::Contains(const Edge& e) const {
  return bits_.test(ctx_.EdgeIndex(e));
}

EdgeSetMask& EdgeSetMask::operator|=(const EdgeSetMask& other) {
  if (!(ctx_ == other.ctx_)) throw InputError("mask context mismatch");
  bits_ |= other.bits_;
  return *this;
}

EdgeSetMask& EdgeSetMask::operator&=(const EdgeSetMask& other) {
  if (!(ctx_ == other.ctx_)) throw InputError("mask context mismatch");
  bits_ &= other.bits_;
  return *this;
}

EdgeSet EdgeSetMask::ToEdges() const {
  EdgeSet out;
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i)) {
    out.push_back(ctx_.EdgeAt(i));
  }
  return out;
}

std::string FormatEdge(const Edge& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

std::string FormatEdgeList(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ',';
    out += FormatEdge(e);
  }
  return out;
}

namespace {

Vertex ParseVertex(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("malformed edge '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

EdgeSet ParseEdgeList(const PolygonContext& ctx, const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw InputError("malformed edge '" + item + "', expected a-b");
    }
    const std::string_view view(item);
    const Vertex u = ParseVertex(view.substr(0, dash), view);
    const Vertex v = ParseVertex(view.substr(dash + 1), view);
    if (!ctx.IsVertex(u) || !ctx.IsVertex(v)) {
      throw InputError("edge '" + item + "' has a vertex outside 0.." +
                       std::to_string(ctx.n() - 1));
    }
    edges.push_back(ctx.MakeEdge(u, v));
  }
  if (edges.empty()) throw InputError("empty edge list");
  const std::size_t given = edges.size();
  EdgeSet out = Canonicalize(ctx, std::move(edges));
  if (out.size() != given) throw InputError("duplicate edge in '" + text + "'");
  return out;
}

}  // namespace convex_blockers
