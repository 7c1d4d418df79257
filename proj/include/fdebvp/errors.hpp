#pragma once

#include <stdexcept>
#include <string>

namespace fdebvp {

/** Base class for all library errors. */
class FdeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/** Expression text could not be parsed; carries the byte offset of the fault. */
class ParseError : public FdeError {
public:
  ParseError(const std::string& what, std::size_t position)
      : FdeError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/** Expression evaluation left the real domain (log of a negative number,
    division by zero, overflow, ...). Raised instead of propagating NaN/inf. */
class EvalError : public FdeError {
public:
  using FdeError::FdeError;
};

/** A problem definition failed validation; details are in the report. */
class ValidationError : public FdeError {
public:
  using FdeError::FdeError;
};

/** The delay map left [0, a] by more than the clamping tolerance. */
class DelayOutOfRange : public FdeError {
public:
  using FdeError::FdeError;
};

/** The linear system defining the Green function (or the boundary polynomial)
    is numerically singular for the given boundary conditions. */
class SingularGreenSystem : public FdeError {
public:
  using FdeError::FdeError;
};

/** The fixed-point iteration produced non-finite or unbounded iterates. */
class DivergenceError : public FdeError {
public:
  DivergenceError(const std::string& what, int iteration)
      : FdeError(what), iteration_(iteration) {}
  int iteration() const noexcept { return iteration_; }

private:
  int iteration_ = 0;
};

/** Config file could not be read, parsed, or mapped onto a problem. */
class ConfigError : public FdeError {
public:
  using FdeError::FdeError;
};

}  // namespace fdebvp
