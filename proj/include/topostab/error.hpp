#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topostab {

enum class ErrorCode {
  NonPositivePrice,
  TooFewRows,
  WindowTooLong,
  WindowTooShort,
  EmptyCloud,
  MissingFace,
  FiltrationDimensionTooLow,
  FileNotFound,
  ParseError,
  TooFewCommonRows,
  InvalidConfig,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Exit status used by the CLI: 1 usage, 2 data, 3 I/O.
int exit_code_for(ErrorCode code);

}  // namespace topostab
