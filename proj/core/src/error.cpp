#include "conmod/error.hpp"

namespace conmod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::IllDefinedMap: return "IllDefinedMap";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::LambdaNotMultiplicative: return "LambdaNotMultiplicative";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::ConormalInfinite: return "ConormalInfinite";
    case ErrorKind::IllDefinedMultiplication: return "IllDefinedMultiplication";
    case ErrorKind::NotFiniteLength: return "NotFiniteLength";
    case ErrorKind::AugmentationNotInduced: return "AugmentationNotInduced";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::NotGorensteinInput: return "NotGorensteinInput";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace conmod
