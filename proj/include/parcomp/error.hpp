#pragma once

#include <stdexcept>
#include <string>

namespace parcomp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// An input exceeds a configured capacity cap (domain size, query count, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A file or stream could not be parsed; message carries source diagnostics.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace parcomp
