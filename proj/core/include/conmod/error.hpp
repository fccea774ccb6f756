#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conmod {

enum class ErrorKind {
  SpecMismatch,
  NotAUnit,
  ZeroElement,
  DimensionMismatch,
  InfiniteLength,
  AmbientMismatch,
  IllDefinedMap,
  NotAssociative,
  NotCommutative,
  NotUnital,
  LambdaNotMultiplicative,
  NotLocal,
  ConormalInfinite,
  IllDefinedMultiplication,
  NotFiniteLength,
  AugmentationNotInduced,
  NotSurjective,
  NotAlgebraMap,
  InvalidModule,
  StabilizationFailure,
  NotGorensteinInput,
  PreconditionFailed,
  InternalInvariantViolation,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by length computations on modules of positive free rank.
class InfiniteLengthError : public Error {
 public:
  explicit InfiniteLengthError(long free_rank)
      : Error(ErrorKind::InfiniteLength, "free rank " + std::to_string(free_rank)),
        free_rank_(free_rank) {}

  long free_rank() const noexcept { return free_rank_; }

 private:
  long free_rank_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

// Checked consequence of a theorem; a false condition is a bug or an out-of-hypothesis input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InternalInvariantViolation, what);
}

}  // namespace conmod
