#ifndef CONVEX_BLOCKERS_ERRORS_H_
#define CONVEX_BLOCKERS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace convex_blockers {

// Malformed arguments: bad vertex labels, out-of-range parameters, wrong
// cardinalities.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A request would exceed a configured enumeration cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Well-formed parameters for which the requested object does not exist.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// The input edge set does not have the structure an operation relies on.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_ERRORS_H_
