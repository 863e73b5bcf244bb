#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowindex {

/// Caller violated an operation's precondition (degree mismatch, unknown
/// letter, bad parameter).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input; `position` is the byte offset where parsing stopped.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lowindex
