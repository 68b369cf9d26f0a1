#include "epg/error.hpp"

namespace epg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kUnsupportedDiameter: return "unsupported-diameter";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kUnsupportedFamily: return "unsupported-family";
    case ErrorKind::kInternalError: return "internal-error";
  }
  return "unknown";
}

}  // namespace epg
