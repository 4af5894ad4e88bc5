#include "artin/error.hpp"

namespace artin {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::ResonantVertex: return "ResonantVertex";
    case ErrorCode::ResonantCharacter: return "ResonantCharacter";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::ForestBudgetExceeded: return "ForestBudgetExceeded";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ParseError::ParseError(int line, int column, const std::string& msg)
    : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

}  // namespace artin
