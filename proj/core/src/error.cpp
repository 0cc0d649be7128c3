#include "orbitlab/error.hpp"

namespace orbitlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::BelowDiagonal: return "BelowDiagonal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::RankDeficientAmbient: return "RankDeficientAmbient";
    case ErrorCode::KernelRankError: return "KernelRankError";
    case ErrorCode::UnsupportedComplexity: return "UnsupportedComplexity";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::UnsupportedProfile: return "UnsupportedProfile";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace orbitlab
