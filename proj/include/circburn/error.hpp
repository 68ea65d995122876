#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circburn {

enum class ErrorCode {
  ZeroDistance,
  Disconnected,
  InvalidArgument,
  UnsupportedSpec,
  HypothesisViolated,
  DuplicateSource,
  VertexOutOfRange,
  BadOrder,
  ExactCapExceeded,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDistance: return "ZeroDistance";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DuplicateSource: return "DuplicateSource";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ExactCapExceeded: return "ExactCapExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circburn
