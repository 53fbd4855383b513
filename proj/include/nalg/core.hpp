#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nalg {

/// A color: a 1-based label into the carrier {1, ..., n}. Zero is reserved
/// for "undefined" in product tables and reports.
using Element = int;

inline constexpr Element kUndefined = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table has the wrong dimensions or holds a label outside 1..n.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Raised when a handlebody-link diagram is colored by a non-idempotent algebra.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// The exhaustive oracle refuses search spaces above its cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

namespace detail {

inline constexpr std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace detail

}  // namespace nalg
