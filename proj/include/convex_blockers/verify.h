#ifndef CONVEX_BLOCKERS_VERIFY_H_
#define CONVEX_BLOCKERS_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convex_blockers/blockers.h"
#include "convex_blockers/limits.h"

namespace convex_blockers {

// Extensional check of the blocker characterization at one m.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 10;

  int m = 0;
  std::uint64_t spm_count = 0;
  std::uint64_t expected_catalan = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t generated_count = 0;
  BigInt formula_count = 0;
  int oracle_minimum_size = 0;
  bool set_equality = false;
  // Every generated blocker meets every SPM.
  bool generated_all_block = false;
  bool structural_pass = false;
  // Present only when the naive search ran.
  std::optional<bool> naive_agrees;
  std::optional<bool> lower_bound_pass;

  std::vector<EdgeSet> oracle_only;
  std::vector<EdgeSet> generated_only;
  std::vector<std::string> structural_failures;
  std::map<std::string, double> millis;

  bool passed() const;
};

// Runs the full comparison for every m in m_min..m_max; the naive search
// also runs where m <= naive_up_to.
std::vector<VerificationReport> VerifyTheorem(int m_min, int m_max,
                                              int naive_up_to,
                                              const Limits& limits = {});

// Half-boundaries and odd-order stars at every rotation block every SPM, and
// every minimum blocker found by the pruned search has two or more boundary
// edges.
bool VerifySpecialBlockers(int m, const Limits& limits = {});

// C(m) by the convolution recurrence, independent of any enumeration.
std::uint64_t CatalanNumber(int m);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_VERIFY_H_
