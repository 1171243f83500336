#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace edwing {

// Base for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input value violates the invariant of the type or operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input (material DB, config). Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::string const& source, std::size_t line, std::string const& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A file could not be opened for reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

// The planform solve found no sign change of the cruise residual.
class InfeasibleDesign : public Error {
 public:
  InfeasibleDesign(std::string const& what, double residual_low, double residual_high)
      : Error(what), residual_low_(residual_low), residual_high_(residual_high) {}

  double residual_low() const noexcept { return residual_low_; }
  double residual_high() const noexcept { return residual_high_; }

 private:
  double residual_low_;
  double residual_high_;
};

// Wraps a failure with the name of the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, std::string const& what)
      : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}

  std::string const& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

namespace detail {

inline void require(bool condition, std::string const& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail

}  // namespace edwing
