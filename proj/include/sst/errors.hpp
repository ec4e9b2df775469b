#pragma once

#include <stdexcept>

namespace sst {

/// Malformed or out-of-contract input (bad files, violated preconditions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold exactly did not.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sst
