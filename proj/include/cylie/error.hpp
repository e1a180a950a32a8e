#ifndef CYLIE_ERROR_HPP
#define CYLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cylie {

// Every failure mode the library reports deliberately. Anything else
// escaping a public operation is a bug.
enum class ErrorKind {
  Overflow,
  ZeroInverse,
  UnsupportedRing,
  RingMismatch,
  ShapeMismatch,
  MissingAssignment,
  PairingViolation,
  NotNilpotent,
  NotUnipotent,
  NotUnitNorm,
  DegenerateForm,
  NotClosed,
  NotDiagonalGenerator,
  NotDiagonalTorus,
  ConstraintViolated,
  UnknownSelector,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what_arg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what_arg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace cylie

#endif
