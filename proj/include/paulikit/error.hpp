#pragma once

#include <stdexcept>
#include <string>

namespace paulikit {

// Error categories raised by the library. The CLI maps NotPowerOfTwo to
// exit code 3 and everything else to exit code 2.
enum class Errc {
  EmptyString,
  InvalidCharacter,
  MixedAlphabet,
  ZeroWeight,
  NTooLarge,
  NonDiagonalAxis,
  NTooLargeForDense,
  IndexOutOfRange,
  DimensionMismatch,
  NotPowerOfTwo,
  NonSquare,
  LengthMismatch,
  EmptyTermList,
  BetaShapeMismatch,
  MalformedFile,
  UnknownMethod,
  InvalidRange,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace paulikit
