#pragma once

#include <stdexcept>
#include <string>

namespace ap2 {

// Bad parameters, malformed input files, unknown names. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit (table order, poset members, face count) was hit
// before the computation finished. CLI exit code 3.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ap2
