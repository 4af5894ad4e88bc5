#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorCode {
  ZeroCharacter,
  ResonantVertex,
  ResonantCharacter,
  ZeroPolynomial,
  SizeMismatch,
  DisconnectedGraph,
  NegativeMultiplicity,
  ForestBudgetExceeded,
  InvalidGraph,
  InvalidField,
  NotNormalized,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Input errors carry a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace artin
