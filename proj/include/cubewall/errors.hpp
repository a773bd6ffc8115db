#pragma once

#include <stdexcept>
#include <string>

namespace cubewall {

/// Malformed or out-of-domain input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a documented size cap (CLI exit code 3).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check tripped; indicates corrupted data or a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubewall
