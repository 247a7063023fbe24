#ifndef CYCLEREP_ERRORS_HPP
#define CYCLEREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclerep {

/// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed scalar, matrix or document text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller supplied a cycle, spec or bound that the operation rejects.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclerep

#endif  // CYCLEREP_ERRORS_HPP
