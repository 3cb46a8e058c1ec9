#pragma once

#include <stdexcept>
#include <string>

namespace nilext {

/// Shape or ambient-dimension mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates a mathematical precondition (not nilpotent, not
/// solvable, not an ideal, ...). Derived types carry a witness.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nilext
