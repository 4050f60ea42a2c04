#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpz {

// Base of everything the library throws on bad input or exhausted limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: wrong rank, non-root passed as a root, index out
// of range and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation is defined, just not for this rank.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Invalid -2-curve configurations and non-ADE diagrams.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A homomorphism that fails a defining linear constraint.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Orbit enumeration stopped at its cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t partial_count)
      : Error(what + " (stopped after " + std::to_string(partial_count) +
              " elements)"),
        partial_count_(partial_count) {}

  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// A mathematical guarantee did not hold. Never expected in practice.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpz
