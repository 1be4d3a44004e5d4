#pragma once

#include <stdexcept>
#include <string>

namespace aniso {

// Every failure the library reports carries one of these codes. The C API maps
// them one-to-one onto aniso_status values.
enum class ErrorCode {
  NotExpansive = 1,
  Singular,
  UnsupportedDimension,
  InvalidRatio,
  TruncationFailure,
  EmptySample,
  InvalidExponent,
  InvalidRange,
  DegenerateProfile,
  NoValidFrequencies,
  BoundaryLeak,
  GridTooCoarse,
  SpectralLeak,
  ThresholdViolation,
  InvalidArgument,
  ParseError,
  UnknownSuite,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace aniso
