#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simonsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Register width exceeds the configured memory bound.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Operands disagree on register width or table length.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An argument is outside its documented domain.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// A hidden shift of zero was supplied.
class InvalidShiftError : public Error {
  public:
    using Error::Error;
};

/// The function table does not satisfy the two-to-one shift promise.
class PromiseViolationError : public Error {
  public:
    PromiseViolationError(std::uint64_t offending_x, const std::string &what)
        : Error(what), offending_x_(offending_x) {}

    [[nodiscard]] std::uint64_t offending_x() const noexcept {
        return offending_x_;
    }

  private:
    std::uint64_t offending_x_;
};

/// Constraint system rank is below n - 1, so the shift is not yet unique.
class InsufficientRankError : public Error {
  public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace simonsim
