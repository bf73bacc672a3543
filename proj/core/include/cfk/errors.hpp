#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfk {

enum class ErrorCode {
  ParameterizationInvalid,
  DiagramDisconnected,
  DiagramNotS3,
  WindowExhausted,
  GradingInconsistent,
  DSquaredNonzero,
  ParseError,
  VerificationFailed,
  KnotNotFound,
  TowerCountUnexpected,
  NoSolution,
  SolutionSpaceTooLarge,
  IotaNotA0Compatible,
  TowerClassificationAmbiguous,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParameterizationInvalid: return "ParameterizationInvalid";
    case ErrorCode::DiagramDisconnected: return "DiagramDisconnected";
    case ErrorCode::DiagramNotS3: return "DiagramNotS3";
    case ErrorCode::WindowExhausted: return "WindowExhausted";
    case ErrorCode::GradingInconsistent: return "GradingInconsistent";
    case ErrorCode::DSquaredNonzero: return "DSquaredNonzero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::KnotNotFound: return "KnotNotFound";
    case ErrorCode::TowerCountUnexpected: return "TowerCountUnexpected";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::SolutionSpaceTooLarge: return "SolutionSpaceTooLarge";
    case ErrorCode::IotaNotA0Compatible: return "IotaNotA0Compatible";
    case ErrorCode::TowerClassificationAmbiguous: return "TowerClassificationAmbiguous";
  }
  return "Unknown";
}

}  // namespace cfk
