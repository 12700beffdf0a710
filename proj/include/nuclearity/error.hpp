#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nuclearity {

enum class ErrorKind {
  InvalidInterval,
  NotCompactInclusion,
  NonPositiveParameter,
  ParameterAtSingularity,
  ParameterOutOfRange,
  BadWeight,
  TooSmall,
  SingularH,
  DivergentSpectrum,
  InsufficientGrid,
  BadDimension,
  EvenDimensionUnsupported,
  RadiusNotGreaterThanOne,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NotCompactInclusion: return "NotCompactInclusion";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::ParameterAtSingularity: return "ParameterAtSingularity";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SingularH: return "SingularH";
    case ErrorKind::DivergentSpectrum: return "DivergentSpectrum";
    case ErrorKind::InsufficientGrid: return "InsufficientGrid";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::EvenDimensionUnsupported: return "EvenDimensionUnsupported";
    case ErrorKind::RadiusNotGreaterThanOne: return "RadiusNotGreaterThanOne";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace nuclearity
