#pragma once

#include <stdexcept>
#include <string>

namespace skewtrace {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteEntry : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class ZeroTrace : public Error {
 public:
  using Error::Error;
};

/// A spectral function or scalar formula was evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same quantity disagree beyond rounding, or a quantity
/// that must be non-negative came out clearly negative.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace skewtrace
