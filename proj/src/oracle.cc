#include "convex_blockers/oracle.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "convex_blockers/errors.h"

namespace convex_blockers {
namespace {

class NaiveSearch {
 public:
  explicit NaiveSearch(const SpmFamilyIndex& index)
      : index_(index), acc_(index.ctx.m() + 1, SpmMask(index.size())) {}

  // Collects every blocking set of exactly k edges.
  void Run(int k) {
    chosen_.assign(k, 0);
    acc_[k].reset();
    Visit(k, static_cast<int>(index_.ctx.edge_count()));
  }

  std::vector<EdgeSet>& found() { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Chooses the remaining `k` smallest elements below `bound`; the largest
  // element varies slowest, which yields colexicographic order overall.
  void Visit(int k, int bound) {
    const SpmMask& outer = acc_[k];
    for (int c = k - 1; c < bound; ++c) {
      SpmMask& acc = acc_[k - 1];
      acc = outer;
      acc |= index_.per_edge_hits[c];
      chosen_[k - 1] = c;
      if (k == 1) {
        ++nodes_;
        if (acc.all()) Record();
      } else {
        Visit(k - 1, c);
      }
    }
  }

  void Record() {
    EdgeSet set;
    for (int c : chosen_) set.push_back(index_.ctx.EdgeAt(c));
    std::sort(set.begin(), set.end());
    found_.push_back(std::move(set));
  }

  const SpmFamilyIndex& index_;
  std::vector<SpmMask> acc_;  // acc_[k]: union over elements already chosen
  std::vector<int> chosen_;
  std::vector<EdgeSet> found_;
  std::uint64_t nodes_ = 0;
};

class ClassPrunedSearch {
 public:
  explicit ClassPrunedSearch(const SpmFamilyIndex& index) : index_(index) {
    const PolygonContext& ctx = index.ctx;
    const int m = ctx.m();
    for (int cls = 1; cls < ctx.n(); cls += 2) {
      std::vector<std::size_t> members;
      for (const Edge& e : ParallelClass(ctx, cls)) {
        members.push_back(ctx.EdgeIndex(e));
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
    reachable_.assign(m + 1, SpmMask(index.size()));
    for (int level = m - 1; level >= 0; --level) {
      reachable_[level] = reachable_[level + 1];
      for (std::size_t e : classes_[level]) {
        reachable_[level] |= index.per_edge_hits[e];
      }
    }
    uncovered_.assign(m + 1, SpmMask(index.size()));
    uncovered_[0].set();
    chosen_.assign(m, 0);
  }

  void Run() { Visit(0); }

  std::vector<EdgeSet>& found() { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void Visit(int level) {
    ++nodes_;
    const SpmMask& uncovered = uncovered_[level];
    if (!uncovered.is_subset_of(reachable_[level])) return;
    if (level == static_cast<int>(classes_.size())) {
      Record();  // uncovered is empty here: reachable_ at the end is empty
      return;
    }
    for (std::size_t e : classes_[level]) {
      SpmMask& next = uncovered_[level + 1];
      next = uncovered;
      next -= index_.per_edge_hits[e];
      chosen_[level] = e;
      Visit(level + 1);
    }
  }

  void Record() {
    EdgeSet set;
    for (std::size_t e : chosen_) set.push_back(index_.ctx.EdgeAt(e));
    std::sort(set.begin(), set.end());
    found_.push_back(std::move(set));
  }

  const SpmFamilyIndex& index_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<SpmMask> reachable_;  // SPMs hit by some edge of classes >= i
  std::vector<SpmMask> uncovered_;
  std::vector<std::size_t> chosen_;
  std::vector<EdgeSet> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SpmFamilyIndex BuildFamilyIndex(const PolygonContext& ctx,
                                const Limits& limits) {
  SpmFamilyIndex index{ctx, EnumerateSpms(ctx, limits), {}, {}};
  index.per_edge_hits.assign(ctx.edge_count(), SpmMask(index.matchings.size()));
  index.spms.reserve(index.matchings.size());
  for (std::size_t s = 0; s < index.matchings.size(); ++s) {
    index.spms.emplace_back(ctx, index.matchings[s]);
    for (const Edge& e : index.matchings[s]) {
      index.per_edge_hits[ctx.EdgeIndex(e)].set(s);
    }
  }
  return index;
}

bool IsBlockingSet(const SpmFamilyIndex& index, const std::vector<Edge>& edges) {
  SpmMask hit(index.size());
  for (const Edge& e : edges) hit |= index.per_edge_hits[index.ctx.EdgeIndex(e)];
  return hit.all();
}

std::vector<Matching> MissedSpms(const SpmFamilyIndex& index,
                                 const std::vector<Edge>& edges) {
  const EdgeSetMask mask(index.ctx, edges);
  std::vector<Matching> missed;
  for (std::size_t s = 0; s < index.size(); ++s) {
    if (!index.spms[s].Intersects(mask)) missed.push_back(index.matchings[s]);
  }
  return missed;
}

std::string_view OracleModeName(OracleMode mode) {
  return mode == OracleMode::kNaive ? "naive" : "class_pruned";
}

OracleResult FindMinimumBlockers(const SpmFamilyIndex& index, OracleMode mode,
                                 const Limits& limits) {
  const int m = index.ctx.m();
  const int cap = mode == OracleMode::kNaive ? limits.naive_max_m
                                             : limits.pruned_max_m;
  if (m > cap) {
    throw ResourceError(std::string(OracleModeName(mode)) + " oracle for m=" +
                        std::to_string(m) + " exceeds the cap m<=" +
                        std::to_string(cap));
  }
  const auto begin = std::chrono::steady_clock::now();
  OracleResult result;
  result.mode = mode;
  if (mode == OracleMode::kNaive) {
    NaiveSearch search(index);
    for (int k = 1; k <= m; ++k) {
      search.Run(k);
      if (!search.found().empty()) {
        result.minimum_size = k;
        break;
      }
    }
    result.minimum_sets = std::move(search.found());
    result.nodes = search.nodes();
  } else {
    ClassPrunedSearch search(index);
    search.Run();
    result.minimum_sets = std::move(search.found());
    result.nodes = search.nodes();
    if (!result.minimum_sets.empty()) result.minimum_size = m;
  }
  std::sort(result.minimum_sets.begin(), result.minimum_sets.end());
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - begin)
                      .count();
  return result;
}

}  // namespace convex_blockers
