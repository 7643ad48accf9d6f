#pragma once

#include <stdexcept>
#include <string>

namespace rsklip {

// Bad input: malformed permutation/partition/tableau, out-of-range argument.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request whose cost would be unreasonable; carries a cost estimate in the
// message instead of silently running for hours.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsklip
