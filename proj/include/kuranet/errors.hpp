#pragma once

#include <stdexcept>
#include <string>

namespace kuranet {

enum class ErrorCode {
  AsymmetricWeights,
  NegativeWeight,
  NonzeroDiagonal,
  Disconnected,
  NoEdges,
  ConnectivityUnreachable,
  BadOption,
  DimensionMismatch,
  EmptyVector,
  BadDomain,
  NonFiniteState,
  TooFewSamples,
  AlreadyConverged,
  HorizonTooShort,
  ConfigError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricWeights: return "AsymmetricWeights";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::ConnectivityUnreachable: return "ConnectivityUnreachable";
    case ErrorCode::BadOption: return "BadOption";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::AlreadyConverged: return "AlreadyConverged";
    case ErrorCode::HorizonTooShort: return "HorizonTooShort";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kuranet
