#pragma once

#include <stdexcept>
#include <string>

namespace niep {

enum class Errc {
  NotSelfConjugate,
  PerronMissing,
  PerronViolated,
  NegativeEntry,
  TooLarge,
  NotEigenvector,
  DiagonalTooSmall,
  InputTooSmall,
  PreconditionFailed,
  ConditionFailed,
  NotSuleimanova,
  NotRealizable,
  AlphaNotPositive,
  NotNegationInvariant,
  HalfSpectrumUnrealized,
  PerronVectorFailed,
  InvalidArgument,
  BadShape,
  BadInput,
  ArcCollision,
  UnknownCase,
  DimensionMismatch,
  ParseError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace niep
