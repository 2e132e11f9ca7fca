#include "topostab/error.hpp"

namespace topostab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::FiltrationDimensionTooLow: return "FiltrationDimensionTooLow";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewCommonRows: return "TooFewCommonRows";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig:
      return 1;
    case ErrorCode::FileNotFound:
    case ErrorCode::IoError:
      return 3;
    default:
      return 2;
  }
}

}  // namespace topostab
