#include "nclift/errors.hpp"

namespace nclift {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedJson: return "MALFORMED_JSON";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::BadField: return "BAD_FIELD";
    case ErrorCode::BadScalar: return "BAD_SCALAR";
    case ErrorCode::AlgebraNotAssociative: return "ALGEBRA_NOT_ASSOCIATIVE";
    case ErrorCode::AlgebraBadUnit: return "ALGEBRA_BAD_UNIT";
    case ErrorCode::ComplexNotDg: return "COMPLEX_NOT_DG";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NotLocal: return "NOT_LOCAL";
    case ErrorCode::GuardTooSmall: return "GUARD_TOO_SMALL";
    case ErrorCode::NoPresentation: return "NO_PRESENTATION";
    case ErrorCode::BadArgument: return "BAD_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace nclift
