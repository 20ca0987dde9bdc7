#pragma once

#include <stdexcept>
#include <string>

namespace definetti {

/// Malformed input or violated precondition supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a documented enumeration or memory cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace definetti
