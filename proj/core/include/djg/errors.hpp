#pragma once

#include <stdexcept>
#include <string>

namespace djg {

// Bad user input or violated operation precondition.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee the algorithms rely on failed to hold.
// Reaching this on valid input means a bug, not a usage error.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// An exact oracle was asked to exceed its configured instance cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace djg
