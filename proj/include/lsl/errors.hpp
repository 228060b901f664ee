#pragma once

#include <stdexcept>
#include <string>

namespace lsl {

// Caller violated an operation precondition (mixed lattice kinds, empty pair
// filter, out-of-range index, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A path contains an edge whose length is neither 1 nor the lattice radical.
class MixedRadicalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No path exists between the requested vertices.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (JSON schema violations, inconsistent sections).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs refer to different lattice kinds (square template on a hex section, ...).
class KindMismatchError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace lsl
