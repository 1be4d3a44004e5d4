#include "aniso/error.hpp"

namespace aniso {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotExpansive: return "NotExpansive";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidRatio: return "InvalidRatio";
    case ErrorCode::TruncationFailure: return "TruncationFailure";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::DegenerateProfile: return "DegenerateProfile";
    case ErrorCode::NoValidFrequencies: return "NoValidFrequencies";
    case ErrorCode::BoundaryLeak: return "BoundaryLeak";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::SpectralLeak: return "SpectralLeak";
    case ErrorCode::ThresholdViolation: return "ThresholdViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace aniso
