#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bindingfactor {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (set outside the graph,
/// non-edge passed for removal, side that is not independent, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds an exhaustive-search cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Family parameters that violate the construction constraints.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; offset is the zero-based byte position, line is
/// 1-based when the input came from a multi-line stream (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error((line ? "line " + std::to_string(line) + ": " : std::string()) + what + " at byte " +
              std::to_string(offset)),
        reason_(what),
        offset_(offset),
        line_(line) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace bindingfactor
