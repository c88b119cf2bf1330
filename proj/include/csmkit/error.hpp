#pragma once

#include <stdexcept>
#include <string>

namespace csmkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad index, unknown type label, bad permutation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Weyl group enumeration exceeded the configured element cap.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// An exact division left a remainder. Always an engine bug.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

}  // namespace csmkit
