#include "niep/error.hpp"

namespace niep {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NotSelfConjugate: return "NotSelfConjugate";
    case Errc::PerronMissing: return "PerronMissing";
    case Errc::PerronViolated: return "PerronViolated";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotEigenvector: return "NotEigenvector";
    case Errc::DiagonalTooSmall: return "DiagonalTooSmall";
    case Errc::InputTooSmall: return "InputTooSmall";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ConditionFailed: return "ConditionFailed";
    case Errc::NotSuleimanova: return "NotSuleimanova";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::AlphaNotPositive: return "AlphaNotPositive";
    case Errc::NotNegationInvariant: return "NotNegationInvariant";
    case Errc::HalfSpectrumUnrealized: return "HalfSpectrumUnrealized";
    case Errc::PerronVectorFailed: return "PerronVectorFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BadShape: return "BadShape";
    case Errc::BadInput: return "BadInput";
    case Errc::ArcCollision: return "ArcCollision";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace niep
