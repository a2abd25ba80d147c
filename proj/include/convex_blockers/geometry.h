#ifndef CONVEX_BLOCKERS_GEOMETRY_H_
#define CONVEX_BLOCKERS_GEOMETRY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace convex_blockers {

using Vertex = int;

// An unordered vertex pair, stored normalized with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A canonical edge set: normalized edges, sorted ascending, no duplicates.
using EdgeSet = std::vector<Edge>;

// The complete convex geometric graph on 2m vertices labelled 0..2m-1
// counterclockwise.
class PolygonContext {
 public:
  explicit PolygonContext(int m);

  int m() const { return m_; }
  int n() const { return 2 * m_; }
  std::size_t edge_count() const {
    return static_cast<std::size_t>(m_) * (2 * m_ - 1);
  }

  // Reduces any integer label modulo 2m into 0..2m-1.
  Vertex Wrap(long long v) const;

  bool IsVertex(Vertex v) const { return v >= 0 && v < n(); }

  // Builds a normalized edge from two labels taken modulo 2m. Throws
  // InputError when they coincide.
  Edge MakeEdge(long long u, long long v) const;

  // Throws InputError unless e is normalized with both endpoints in range.
  void Validate(const Edge& e) const;

  // Lexicographic rank of (a, b) among all pairs.
  std::size_t EdgeIndex(const Edge& e) const;
  Edge EdgeAt(std::size_t index) const;

  // Boundary edge [i, i+1] (mod 2m).
  Edge BoundaryEdge(long long i) const { return MakeEdge(i, i + 1); }

  friend bool operator==(const PolygonContext&,
                         const PolygonContext&) = default;

 private:
  int m_;
};

// Sorts, deduplicates and validates; the result is the canonical form used
// for comparisons throughout the library.
EdgeSet Canonicalize(const PolygonContext& ctx, std::vector<Edge> edges);

int EdgeOrder(const PolygonContext& ctx, const Edge& e);

inline bool IsBoundary(const PolygonContext& ctx, const Edge& e) {
  return EdgeOrder(ctx, e) == 1;
}

// (a + b) mod 2m; two vertex-disjoint edges are parallel iff their class ids
// agree.
int ClassId(const PolygonContext& ctx, const Edge& e);

bool AreParallel(const PolygonContext& ctx, const Edge& e, const Edge& f);

// All edges [i, j] with i + j == class_id (mod 2m), ascending.
EdgeSet ParallelClass(const PolygonContext& ctx, int class_id);

// Proper crossing of two chords of the convex polygon: no shared vertex and
// the endpoints interleave cyclically.
bool EdgesCross(const PolygonContext& ctx, const Edge& e, const Edge& f);

bool SharesVertex(const Edge& e, const Edge& f);

// Dense membership bitmap over the edge index space of one context.
class EdgeSetMask {
 public:
  explicit EdgeSetMask(const PolygonContext& ctx);
  EdgeSetMask(const PolygonContext& ctx, std::span<const Edge> edges);

  void Insert(const Edge& e);
  bool Contains(const Edge& e) const;
  std::size_t Count() const { return bits_.count(); }
  bool Intersects(const EdgeSetMask& other) const {
    return bits_.intersects(other.bits_);
  }

  EdgeSetMask& operator|=(const EdgeSetMask& other);
  EdgeSetMask& operator&=(const EdgeSetMask& other);
  friend EdgeSetMask operator|(EdgeSetMask lhs, const EdgeSetMask& rhs) {
    return lhs |= rhs;
  }
  friend EdgeSetMask operator&(EdgeSetMask lhs, const EdgeSetMask& rhs) {
    return lhs &= rhs;
  }
  friend bool operator==(const EdgeSetMask&, const EdgeSetMask&) = default;

  EdgeSet ToEdges() const;
  const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

 private:
  PolygonContext ctx_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// Text forms: "a-b" and "a-b,c-d,...".
std::string FormatEdge(const Edge& e);
std::string FormatEdgeList(std::span<const Edge> edges);
// Parses the comma-separated form. Labels must already lie in 0..2m-1.
EdgeSet ParseEdgeList(const PolygonContext& ctx, const std::string& text);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_GEOMETRY_H_
