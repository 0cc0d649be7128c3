// Structured errors for the orbitlab library. Every failure carries a stable
// machine-readable code (used by the CLI for exit statuses and by batch mode
// for per-row status columns) next to the human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

enum class ErrorCode {
  // hessenberg
  MonotonicityViolation,  // h(i+1) < h(i)
  BelowDiagonal,          // h(i) < i
  OutOfRange,             // h(i) > n, or an index outside [n]
  InvalidCut,             // block_split cut crossed by a non-removable pair
  // weights
  RankDeficientAmbient,   // span of all weights has rank < r
  KernelRankError,        // integer kernel rank != 1
  UnsupportedComplexity,  // classify_fixed_point on d != 1
  // permutohedron / gkm / orbitspace
  InvalidSpectrum,        // repeated eigenvalue or wrong length
  ReducibleInput,         // h(i) = i for some i < n: decompose first
  UnsupportedProfile,     // not an irreducible complexity-one profile
  // homology
  NotAComplex,            // simplex set not closed under faces
  // cli / parsing
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace orbitlab
