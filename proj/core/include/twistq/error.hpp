#pragma once

#include <stdexcept>
#include <string>

namespace twistq {

// Malformed user input: bad token, index out of range, divisibility failure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed request outside what the library models (off-grid parameter,
// inverse of a non-unit, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consistency check inside the library failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twistq
