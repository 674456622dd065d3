#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bnm {

enum class ErrorCode {
  OddCount,
  TooFew,
  NotStrictlyConvex,
  DuplicatePoint,
  NotCcw,
  NonFinite,
  BadIndex,
  DegenerateSegment,
  SharedEndpoint,
  BadDomain,
  TooLarge,
  InvalidMatching,
  Parse,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::TooFew: return "TooFew";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotCcw: return "NotCcw";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// Every library failure carries a code; what() starts with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bnm
