#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oscm {

// Machine-readable failure categories. The CLI maps these onto exit codes.
enum class ErrorCode {
  invalid_argument,
  size_limit,
  parse,
  internal,
  verify_mismatch,
  io,
  work_limit,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::size_limit: return "size-limit";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal: return "internal-consistency";
    case ErrorCode::verify_mismatch: return "verify-mismatch";
    case ErrorCode::io: return "io";
    case ErrorCode::work_limit: return "work-limit";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the instance reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace oscm
