#include "convex_blockers/limits.h"

#include <cstdlib>
#include <string>

namespace convex_blockers {

Limits Limits::FromEnvironment() {
  Limits limits;
  const char* raw = std::getenv("CONVEX_BLOCKERS_MAX_M");
  if (raw == nullptr) return limits;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used == std::string(raw).size() && value > 0) {
      limits.spm_max_m = limits.naive_max_m = limits.pruned_max_m = value;
    }
  } catch (const std::exception&) {
    // Ignored: malformed values leave the defaults in place.
  }
  return limits;
}

}  // namespace convex_blockers
