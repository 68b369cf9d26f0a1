#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epg {

enum class ErrorKind {
  kInvalidParameter,
  kSizeLimit,
  kOutOfRange,
  kBudgetExceeded,
  kUnsupportedDiameter,
  kParseError,
  kUnsupportedFamily,
  kInternalError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures also remember the offending character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::kParseError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace epg
