#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace letterfractal {

enum class ErrorCode {
  EmptyText,
  NetworkUnavailable,
  NotFound,
  MalformedMarkers,
  DegenerateSeries,
  AllPointsDropped,
  DuplicateManuscript,
  UnknownPlot,
  InvalidInput,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MalformedMarkers: return "MalformedMarkers";
    case ErrorCode::DegenerateSeries: return "DegenerateSeries";
    case ErrorCode::AllPointsDropped: return "AllPointsDropped";
    case ErrorCode::DuplicateManuscript: return "DuplicateManuscript";
    case ErrorCode::UnknownPlot: return "UnknownPlot";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

// Every failure the library raises carries one of the codes above so callers
// (the CLI batch loop in particular) can report per-input outcomes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Re-raise with the manuscript id prefixed to the message.
  [[noreturn]] void rethrow_with_context(std::string_view context) const {
    throw Error(code_, std::string(context) + ": " + detail());
  }

  std::string detail() const {
    std::string msg = what();
    auto prefix = std::string(to_string(code_)) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    return msg;
  }

 private:
  ErrorCode code_;
};

}  // namespace letterfractal
