#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectihull {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs at least one point received none.
class EmptySample : public Error {
public:
  EmptySample() : Error("empty sample") {}
  explicit EmptySample(const std::string& what) : Error(what) {}
};

/// A distance was requested between sets one of which has no points.
class EmptySet : public Error {
public:
  EmptySet() : Error("empty set") {}
  explicit EmptySet(const std::string& what) : Error(what) {}
};

/// Rejection sampling accepted too few draws to make progress.
class RejectionStall : public Error {
public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace rectihull
