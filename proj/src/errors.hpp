#pragma once

#include <stdexcept>

namespace stirmode {

// Argument outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request past the configured row maximum (see config.hpp).
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A certified comparison hit its precision cap without separating, or an
// iteration failed to settle. Diagnostic: not expected on valid inputs.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proved statement failed on concrete inputs. The message carries the
// witness; treat as a serious finding, never swallow.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stirmode
