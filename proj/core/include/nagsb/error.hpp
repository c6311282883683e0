#pragma once

#include <stdexcept>
#include <string>

namespace nagsb {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; carries the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("coefficients belong to different fields") {}
};

class MalformedContext : public Error {
 public:
  using Error::Error;
};

class StepCapExceeded : public Error {
 public:
  explicit StepCapExceeded(std::size_t cap)
      : Error("reduction step cap of " + std::to_string(cap) + " exceeded") {}
};

class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidRelation : public Error {
 public:
  using Error::Error;
};

}  // namespace nagsb
