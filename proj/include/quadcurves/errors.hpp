#pragma once

#include <stdexcept>
#include <string>

namespace qc {

// A violated mathematical precondition or a failed invariant. `reason()` is a
// short stable tag ("not-regular-sequence", "window-too-small", ...) that the
// CLI and tests match on; `what()` carries the human-readable detail.
class MathError : public std::runtime_error {
 public:
  MathError(std::string reason, const std::string& detail)
      : std::runtime_error(reason + ": " + detail), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), message_(msg), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line > 0) {
      return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
    }
    if (column > 0) {
      return "column " + std::to_string(column) + ": " + msg;
    }
    return msg;
  }

  std::string message_;
  int line_;
  int column_;
};

}  // namespace qc
