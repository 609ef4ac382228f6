#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intertwine {

/// Base for all semantic errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed character text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("characters belong to different fields") {}
};

class InvalidQuadruple : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace intertwine
