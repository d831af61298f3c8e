#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vadarc {

// Fatal input, configuration or I/O problem. Maps to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. Maps to exit status 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Non-fatal condition surfaced to the diagnostic stream and counted in the run report.
struct Warning {
  std::string message;
};

using Warnings = std::vector<Warning>;

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace vadarc
