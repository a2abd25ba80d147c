#include "convex_blockers/verify.h"

#include <algorithm>
#include <chrono>
#include <iterator>

#include "convex_blockers/errors.h"
#include "convex_blockers/oracle.h"

namespace convex_blockers {
namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(double& sink)
      : sink_(sink), begin_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    sink_ += std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - begin_)
                 .count();
  }

 private:
  double& sink_;
  std::chrono::steady_clock::time_point begin_;
};

std::vector<EdgeSet> SortedCopy(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::vector<EdgeSet> Difference(const std::vector<EdgeSet>& lhs,
                                const std::vector<EdgeSet>& rhs) {
  std::vector<EdgeSet> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(out));
  return out;
}

// Caterpillar report, round trip through the parser, and the one edge per
// odd parallel class condition. Returns a description of the first failure.
std::optional<std::string> StructuralFailure(const PolygonContext& ctx,
                                             const EdgeSet& set) {
  const CaterpillarReport report = ValidateCaterpillar(ctx, set);
  if (!report.ok()) {
    return FormatEdgeList(set) + ": " +
           std::string(ViolationName(report.violations.front().violation));
  }
  std::vector<int> per_class(ctx.n(), 0);
  for (const Edge& e : set) ++per_class[ClassId(ctx, e)];
  for (int cls = 1; cls < ctx.n(); cls += 2) {
    if (per_class[cls] != 1) {
      return FormatEdgeList(set) + ": odd class " + std::to_string(cls) +
             " not hit exactly once";
    }
  }
  const ParseResult parsed = ParseBlocker(ctx, set);
  if (const auto* finding = std::get_if<Finding>(&parsed)) {
    return FormatEdgeList(set) + ": parse " +
           std::string(ViolationName(finding->violation));
  }
  if (GenerateBlocker(ctx, std::get<BlockerSpec>(parsed)) != set) {
    return FormatEdgeList(set) + ": parse does not round trip";
  }
  return std::nullopt;
}

}  // namespace

bool VerificationReport::passed() const {
  return spm_count == expected_catalan && oracle_count == formula_count &&
         generated_count == formula_count && oracle_minimum_size == m &&
         set_equality && generated_all_block && structural_pass &&
         naive_agrees.value_or(true) && lower_bound_pass.value_or(true);
}

std::uint64_t CatalanNumber(int m) {
  if (m < 0) throw InputError("Catalan index must be nonnegative");
  std::vector<std::uint64_t> c(m + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= m; ++k) {
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c[m];
}

std::vector<VerificationReport> VerifyTheorem(int m_min, int m_max,
                                              int naive_up_to,
                                              const Limits& limits) {
  if (m_min < 2 || m_min > m_max) {
    throw InputError("verification range needs 2 <= m_min <= m_max");
  }
  if (m_max > limits.pruned_max_m) {
    throw ResourceError("verification up to m=" + std::to_string(m_max) +
                        " exceeds the pruned oracle cap m<=" +
                        std::to_string(limits.pruned_max_m));
  }
  if (std::min(naive_up_to, m_max) > limits.naive_max_m) {
    throw ResourceError("naive verification up to m=" +
                        std::to_string(std::min(naive_up_to, m_max)) +
                        " exceeds the naive oracle cap m<=" +
                        std::to_string(limits.naive_max_m));
  }

  std::vector<VerificationReport> reports;
  for (int m = m_min; m <= m_max; ++m) {
    const PolygonContext ctx(m);
    VerificationReport report;
    report.m = m;
    report.expected_catalan = CatalanNumber(m);
    report.formula_count = CountBlockers(m);

    std::optional<SpmFamilyIndex> index;
    {
      PhaseTimer timer(report.millis["spm_index"]);
      index.emplace(BuildFamilyIndex(ctx, limits));
    }
    report.spm_count = index->size();

    std::vector<EdgeSet> generated;
    {
      PhaseTimer timer(report.millis["generate"]);
      generated = SortedCopy(EnumerateBlockers(ctx));
    }
    report.generated_count = generated.size();

    OracleResult pruned;
    {
      PhaseTimer timer(report.millis["oracle_pruned"]);
      pruned = FindMinimumBlockers(*index, OracleMode::kClassPruned, limits);
    }
    report.oracle_count = pruned.minimum_sets.size();
    report.oracle_minimum_size = pruned.minimum_size;

    if (m <= naive_up_to) {
      PhaseTimer timer(report.millis["oracle_naive"]);
      const OracleResult naive =
          FindMinimumBlockers(*index, OracleMode::kNaive, limits);
      report.naive_agrees = naive.minimum_sets == pruned.minimum_sets &&
                            naive.minimum_size == pruned.minimum_size;
      // Sizes 1..m-1 were exhausted before any blocking set turned up.
      report.lower_bound_pass = naive.minimum_size == m;
    }

    {
      PhaseTimer timer(report.millis["compare"]);
      const auto oracle_only = Difference(pruned.minimum_sets, generated);
      const auto generated_only = Difference(generated, pruned.minimum_sets);
      report.set_equality = oracle_only.empty() && generated_only.empty() &&
                            std::adjacent_find(generated.begin(),
                                               generated.end()) ==
                                generated.end();
      const auto keep = [](const std::vector<EdgeSet>& all) {
        const auto n = std::min(all.size(), VerificationReport::kMaxWitnesses);
        return std::vector<EdgeSet>(all.begin(), all.begin() + n);
      };
      report.oracle_only = keep(oracle_only);
      report.generated_only = keep(generated_only);
      report.generated_all_block = std::all_of(
          generated.begin(), generated.end(),
          [&](const EdgeSet& set) { return IsBlockingSet(*index, set); });
    }

    {
      PhaseTimer timer(report.millis["structure"]);
      for (const auto* collection : {&generated, &pruned.minimum_sets}) {
        for (const EdgeSet& set : *collection) {
          if (auto failure = StructuralFailure(ctx, set)) {
            if (report.structural_failures.size() <
                VerificationReport::kMaxWitnesses) {
              report.structural_failures.push_back(std::move(*failure));
            }
          }
        }
      }
      report.structural_pass = report.structural_failures.empty();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

bool VerifySpecialBlockers(int m, const Limits& limits) {
  const PolygonContext ctx(m);
  if (m < 2) throw InputError("special blockers need m >= 2");
  const SpmFamilyIndex index = BuildFamilyIndex(ctx, limits);
  for (Vertex v = 0; v < ctx.n(); ++v) {
    std::vector<Edge> half;
    for (int i = 0; i < m; ++i) half.push_back(ctx.BoundaryEdge(v + i));
    if (!IsBlockingSet(index, half)) return false;

    std::vector<Edge> star;
    for (int k = 1; k < ctx.n(); k += 2) star.push_back(ctx.MakeEdge(v, v + k));
    if (!IsBlockingSet(index, star)) return false;
  }
  const OracleResult found =
      FindMinimumBlockers(index, OracleMode::kClassPruned, limits);
  return std::all_of(found.minimum_sets.begin(), found.minimum_sets.end(),
                     [&](const EdgeSet& set) {
                       return std::count_if(set.begin(), set.end(),
                                            [&](const Edge& e) {
                                              return IsBoundary(ctx, e);
                                            }) >= 2;
                     });
}

}  // namespace convex_blockers
