#include "cylie/error.hpp"

namespace cylie {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::PairingViolation: return "PairingViolation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::NotUnitNorm: return "NotUnitNorm";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotDiagonalGenerator: return "NotDiagonalGenerator";
    case ErrorKind::NotDiagonalTorus: return "NotDiagonalTorus";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::UnknownSelector: return "UnknownSelector";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace cylie
