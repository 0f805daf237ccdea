#pragma once

#include <stdexcept>
#include <string>

namespace affaut {

/// Error codes shared across the library. The CLI maps them onto its exit
/// code trichotomy: input errors exit 2, mathematical negatives exit 1.
enum class Errc {
  // input / construction errors
  NotPrime,
  CardinalityTooLarge,
  FieldMismatch,
  RingMismatch,
  DimensionMismatch,
  DivisionByZero,
  SyntaxError,
  UnknownVariable,
  NegativeTPower,
  BadRequest,
  // mathematical verdicts
  JacobianNotUnit,
  NotInvertible,
  NotAutomorphism,
  JacobianNotOne,
  NotSAut,
  IdentityInput,
  NotIdAtZero,
  NoWitness,
  IsTranslation,
  DoesNotFixOrigin,
  FixedPointMissing,
  DegenerateGeometry,
  VariableLeak,
  FieldTooSmall,
  WrongCharacteristic,
  ZeroScalar,
  TooManyPoints,
  SingularMatrix,
  ZeroDiagonal,
  Internal,
};

const char* errc_name(Errc c);
bool errc_is_input_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) raise(code, msg);
}

}  // namespace affaut
